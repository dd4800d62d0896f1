#include "quadrex/roots.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

constexpr std::size_t kSolutionBudget = 10000000;

i64 ipow(i64 p, int e) {
  i128 v = 1;
  for (int i = 0; i < e; ++i) {
    v *= p;
    if (v > (i128{1} << 62)) throw Error(Errc::BudgetExceeded, "prime power exceeds 2^62");
  }
  return static_cast<i64>(v);
}

void normalize(std::vector<i64>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

i64 tonelli_shanks(i64 z, i64 p) {
  i64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 n = 2;
  while (legendre_fast(n, p) != -1) ++n;
  int m = s;
  i64 c = mod_pow(n, static_cast<u64>(q), p);
  i64 t = mod_pow(z, static_cast<u64>(q), p);
  i64 r = mod_pow(z, static_cast<u64>((q + 1) / 2), p);
  while (t != 1) {
    int i = 0;
    i64 tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    i64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

// Roots of x^2 == z mod p^beta with p not dividing z.
std::vector<i64> unit_roots(i64 z, i64 p, int beta) {
  i64 q = ipow(p, beta);
  z = mod(z, q);
  std::vector<i64> out;
  if (p == 2) {
    if (beta == 1) return {1};
    if (beta == 2) return z % 4 == 1 ? std::vector<i64>{1, 3} : std::vector<i64>{};
    if (z % 8 != 1) return {};
    i64 x = 1;
    for (int k = 3; k < beta; ++k) {
      i64 next = i64{1} << (k + 1);
      if (mod(mul_mod(x, x, next) - z, next) != 0) x += i64{1} << (k - 1);
    }
    i64 half = q / 2;
    out = {x, q - x, mod(x + half, q), mod(q - x + half, q)};
  } else {
    auto base = sqrt_mod_p(z % p, p);
    if (base.empty()) return {};
    i64 x = base[0];
    i64 pk = p;
    for (int k = 1; k < beta; ++k) {
      pk *= p;
      i64 f = mod(mul_mod(x, x, pk) - z, pk);
      i64 inv = mod_inverse(mod(2 * x, pk), pk);
      x = mod(x - mul_mod(f, inv, pk), pk);
    }
    out = {x, q - x};
  }
  normalize(out);
  return out;
}

}  // namespace

std::vector<i64> sqrt_mod_p(i64 z, i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
  z = mod(z, p);
  if (z == 0) return {0};
  if (legendre_fast(z, p) != 1) return {};
  i64 x = p % 4 == 3 ? mod_pow(z, static_cast<u64>((p + 1) / 4), p) : tonelli_shanks(z, p);
  if (mul_mod(x, x, p) != z) throw Error(Errc::InvalidArgument, "square root check failed");
  return {std::min(x, p - x), std::max(x, p - x)};
}

std::vector<i64> sqrt_mod_prime_power(i64 z, i64 p, int alpha) {
  if (alpha < 1) throw Error(Errc::InvalidArgument, "exponent must be >= 1");
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  i64 q = ipow(p, alpha);
  i64 zr = mod(z, q);
  std::vector<i64> out;
  if (zr == 0) {
    int k = (alpha + 1) / 2;
    i64 step = ipow(p, k);
    for (i64 x = 0; x < q; x += step) out.push_back(x);
    return out;
  }
  int v = 0;
  i64 z1 = zr;
  while (z1 % p == 0) {
    z1 /= p;
    ++v;
  }
  if (v % 2) return {};
  if (v == 0) return unit_roots(zr, p, alpha);
  int mu = v / 2;
  auto base = unit_roots(z1, p, alpha - 2 * mu);
  i64 pmu = ipow(p, mu), step = ipow(p, alpha - mu);
  for (i64 r : base)
    for (i64 i = 0; i < pmu; ++i) out.push_back(mod(r * pmu + i * step, q));
  normalize(out);
  return out;
}

std::vector<i64> sqrt_mod_composite(i64 z, i64 n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (n == 1) return {0};
  Factorization f = factorize(n);
  std::vector<i64> acc = {0};
  i64 m = 1;
  for (auto [p, e] : f.factors) {
    auto part = sqrt_mod_prime_power(z, p, e);
    if (part.empty()) return {};
    i64 q = ipow(p, e);
    if (acc.size() * part.size() > kSolutionBudget) throw Error(Errc::BudgetExceeded, "too many square roots");
    std::vector<i64> next;
    next.reserve(acc.size() * part.size());
    i64 inv = mod_inverse(mod(m, q), q);
    for (i64 a : acc)
      for (i64 r : part) {
        // x == a mod m, x == r mod q
        i64 t = mul_mod(mod(r - a, q), inv, q);
        next.push_back(static_cast<i64>(static_cast<i128>(m) * t + a));
      }
    acc.swap(next);
    m *= q;
  }
  normalize(acc);
  return acc;
}

std::vector<i64> solve_quadratic_mod_p(i64 a, i64 b, i64 c, i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
  a = mod(a, p);
  b = mod(b, p);
  c = mod(c, p);
  if (a == 0) throw Error(Errc::LeadingCoeffZero, "leading coefficient vanishes mod p");
  i64 disc = mod(mul_mod(b, b, p) - mul_mod(4 * a % p, c, p), p);
  i64 inv2a = mod_inverse(2 * a % p, p);
  std::vector<i64> out;
  for (i64 s : sqrt_mod_p(disc, p)) {
    out.push_back(mul_mod(mod(s - b, p), inv2a, p));
    out.push_back(mul_mod(mod(-s - b, p), inv2a, p));
  }
  normalize(out);
  return out;
}

std::vector<i64> solve_quadratic_mod_m(i64 a, i64 b, i64 c, i64 m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  a = mod(a, m);
  b = mod(b, m);
  c = mod(c, m);
  if (a == 0) throw Error(Errc::LeadingCoeffZero, "leading coefficient vanishes mod m");
  i128 big = static_cast<i128>(4) * a * m;
  if (big > (i128{1} << 62)) throw Error(Errc::BudgetExceeded, "4am exceeds 2^62");
  i64 M = static_cast<i64>(big);
  i64 disc = mod(static_cast<i64>((static_cast<i128>(b) * b - static_cast<i128>(4) * a * c) % M), M);
  std::vector<i64> out;
  for (i64 s : sqrt_mod_composite(disc, M)) {
    i64 diff = s - b;
    if (diff % (2 * a) != 0) continue;
    out.push_back(mod(diff / (2 * a), m));
  }
  normalize(out);
  for (i64 x : out) {
    i128 v = (static_cast<i128>(a) * x % m * x + static_cast<i128>(b) * x + c) % m;
    if (v != 0) throw Error(Errc::InvalidArgument, "substitution check failed");
  }
  return out;
}

}  // namespace quadrex
