#include "quadrex/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "quadrex/errors.hpp"

namespace quadrex {

namespace {

constexpr i64 kTrialLimit = 1000000;
constexpr i64 kSieveLimit = 2000000000;

const std::vector<i64>& small_primes() {
  static const std::vector<i64> primes = primes_up_to(kTrialLimit);
  return primes;
}

i64 checked(i128 v, const char* what) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw Error(Errc::BudgetExceeded, std::string(what) + " overflows 64 bits");
  return static_cast<i64>(v);
}

u64 mulmod_u(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u(r, b, m);
    b = mulmod_u(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's cycle variant; returns a nontrivial factor or 0 when the
// iteration budget runs out.
u64 rho(u64 n, u64& budget) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod_u(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod_u(q, x > y ? x - y : y - x, n);
        }
        if (budget < lim) return 0;
        budget -= lim;
        g = gcd_u(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, u64& budget, std::map<i64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[static_cast<i64>(n)]++;
    return;
  }
  u64 d = rho(n, budget);
  if (d == 0)
    throw Error(Errc::FactorBudgetExceeded, "Pollard rho budget exhausted on " + std::to_string(n));
  factor_rec(d, budget, out);
  factor_rec(n / d, budget, out);
}

template <class T>
T abs_val(const T& v) {
  return v < 0 ? T(-v) : v;
}

}  // namespace

Egcd extended_gcd(i64 a, i64 b) {
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "extended_gcd(0, 0)");
  i64 r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < 0) return {-r0, -x0, -y0};
  return {r0, x0, y0};
}

EgcdBig extended_gcd(const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "extended_gcd(0, 0)");
  EgcdBig r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked(static_cast<i128>(a / gcd(a, b)) * b, "lcm");
}

i64 mod_inverse(i64 a, i64 m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  Egcd e = extended_gcd(mod(a, m), m);
  if (e.g != 1)
    throw Error(Errc::NotCoprime, std::to_string(a) + " has no inverse mod " + std::to_string(m));
  return mod(e.x, m);
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(Errc::NotCoprime, "no inverse modulo " + m.get_str());
  return r;
}

LinearSolution solve_linear_diophantine(i64 a, i64 b, i64 c) {
  Egcd e = extended_gcd(a, b);
  if (c % e.g != 0)
    throw Error(Errc::NoSolution, "gcd " + std::to_string(e.g) + " does not divide " + std::to_string(c));
  i64 k = c / e.g;
  return {checked(static_cast<i128>(e.x) * k, "x0"), checked(static_cast<i128>(e.y) * k, "y0"),
          b / e.g, a / e.g};
}

Congruence crt(const std::vector<Congruence>& system) {
  if (system.empty()) throw Error(Errc::InvalidArgument, "empty congruence system");
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].modulus < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (gcd(system[i].modulus, system[j].modulus) != 1)
        throw Error(Errc::ModuliNotCoprime, "moduli " + std::to_string(system[j].modulus) + " and " +
                                                std::to_string(system[i].modulus));
  }
  i64 a = mod(system[0].residue, system[0].modulus), m = system[0].modulus;
  for (std::size_t i = 1; i < system.size(); ++i) {
    i64 a2 = mod(system[i].residue, system[i].modulus), m2 = system[i].modulus;
    i64 nm = checked(static_cast<i128>(m) * m2, "crt modulus");
    // x = a + m*t with m*t == a2 - a (mod m2)
    i64 t = m2 == 1 ? 0 : mul_mod(mod(a2 - a, m2), mod_inverse(mod(m, m2), m2), m2);
    a = static_cast<i64>((static_cast<i128>(m) * t + a) % nm);
    m = nm;
  }
  return {a, m};
}

BigCongruence crt(const std::vector<BigCongruence>& system) {
  if (system.empty()) throw Error(Errc::InvalidArgument, "empty congruence system");
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      mpz_class g = gcd(system[i].modulus, system[j].modulus);
      if (g != 1) throw Error(Errc::ModuliNotCoprime, "moduli share a factor");
    }
  mpz_class a = system[0].residue % system[0].modulus, m = system[0].modulus;
  if (a < 0) a += m;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const mpz_class& m2 = system[i].modulus;
    mpz_class diff = (system[i].residue - a) % m2;
    if (diff < 0) diff += m2;
    mpz_class t = m2 == 1 ? mpz_class(0) : mpz_class(diff * mod_inverse(mpz_class(m % m2), m2) % m2);
    m *= m2;
    a = (a + (m / m2) * t) % m;
  }
  return {a, m};
}

Congruence successive_substitution(const std::vector<Congruence>& system) {
  if (system.empty()) throw Error(Errc::InvalidArgument, "empty congruence system");
  for (const auto& c : system)
    if (c.modulus < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  i64 a = mod(system[0].residue, system[0].modulus), m = system[0].modulus;
  for (std::size_t j = 1; j < system.size(); ++j) {
    i64 a2 = mod(system[j].residue, system[j].modulus), m2 = system[j].modulus;
    i64 g = gcd(m, m2);
    if ((a2 - a) % g != 0) {
      // the system is solvable iff it is pairwise solvable, so some i < j clashes with j
      for (std::size_t i = 0; i < j; ++i) {
        i64 gi = gcd(system[i].modulus, m2);
        if ((mod(system[i].residue, system[i].modulus) - a2) % gi != 0) throw IncompatibleError(i, j);
      }
      throw IncompatibleError(0, j);
    }
    i64 l = lcm(m, m2);
    i64 mg = m2 / g;
    // m*t == a2 - a (mod m2)  <=>  (m/g)*t == (a2-a)/g (mod m2/g)
    i64 t = mg == 1 ? 0 : mul_mod(mod((a2 - a) / g, mg), mod_inverse(mod(m / g, mg), mg), mg);
    a = static_cast<i64>((static_cast<i128>(m) * t + a) % l);
    m = l;
  }
  return {a, m};
}

i64 mod_pow(i64 base, u64 exponent, i64 modulus) {
  if (modulus < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (modulus == 1) return 0;
  i64 b = mod(base, modulus);
  i64 r = 1;
  // bits of the exponent, lowest first
  while (exponent) {
    if (exponent & 1) r = mul_mod(r, b, modulus);
    b = mul_mod(b, b, modulus);
    exponent >>= 1;
  }
  return r;
}

mpz_class mod_pow(const mpz_class& base, const mpz_class& exponent, const mpz_class& modulus) {
  if (modulus < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

i64 Factorization::product() const {
  i128 v = sign;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return static_cast<i64>(v);
}

u64 factor_budget() {
  if (const char* env = std::getenv("QUADREX_FACTOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return u64{1} << 24;
}

Factorization factorize(i64 n) { return factorize(n, factor_budget()); }

Factorization factorize(i64 n, u64 rho_budget) {
  if (n == 0) throw Error(Errc::InvalidArgument, "factorize(0)");
  if (n == std::numeric_limits<i64>::min()) throw Error(Errc::InvalidArgument, "value out of range");
  Factorization f;
  f.value = n;
  f.sign = n < 0 ? -1 : 1;
  u64 m = static_cast<u64>(n < 0 ? -n : n);
  std::map<i64, int> found;
  for (i64 p : small_primes()) {
    if (static_cast<u64>(p) * static_cast<u64>(p) > m) break;
    while (m % static_cast<u64>(p) == 0) {
      m /= static_cast<u64>(p);
      found[p]++;
    }
  }
  if (m > 1) {
    if (m < static_cast<u64>(kTrialLimit) * kTrialLimit)
      found[static_cast<i64>(m)]++;
    else
      factor_rec(m, rho_budget, found);
  }
  f.factors.assign(found.begin(), found.end());
  return f;
}

SquarefreeSplit squarefree_split(i64 n) {
  Factorization f = factorize(n);
  SquarefreeSplit s;
  for (auto [p, e] : f.factors) {
    if (e % 2) {
      s.sigma *= p;
      s.pi_odd.push_back(p);
    } else {
      s.pi_even.push_back(p);
    }
    for (int i = 0; i < e / 2; ++i) s.square *= p;
  }
  return s;
}

std::vector<i64> primes_up_to(i64 x) {
  if (x > kSieveLimit) throw Error(Errc::BudgetExceeded, "sieve bound above " + std::to_string(kSieveLimit));
  std::vector<i64> out;
  if (x < 2) return out;
  out.push_back(2);
  // odd-only sieve: index i stands for 2i+1
  std::size_t n = static_cast<std::size_t>((x - 1) / 2);
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    if (composite[i]) continue;
    i64 p = 2 * static_cast<i64>(i) + 1;
    out.push_back(p);
    for (i64 q = p * p; q <= x; q += 2 * p) composite[static_cast<std::size_t>(q / 2)] = true;
  }
  return out;
}

std::vector<i64> primes_in_range(i64 lo, i64 hi) {
  std::vector<i64> out;
  if (hi < 3 || hi < lo) return out;
  lo = std::max<i64>(lo, 3);
  if (hi - lo > kSieveLimit) throw Error(Errc::BudgetExceeded, "range too wide");
  i64 root = isqrt(hi);
  std::vector<bool> composite(static_cast<std::size_t>(hi - lo + 1), false);
  for (i64 p : primes_up_to(root)) {
    i64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (i64 q = start; q <= hi; q += p) composite[static_cast<std::size_t>(q - lo)] = true;
  }
  for (i64 v = lo; v <= hi; ++v)
    if (v % 2 == 1 && !composite[static_cast<std::size_t>(v - lo)]) out.push_back(v);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases)
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Primality primality(const mpz_class& n) {
  if (n < 2) return Primality::Composite;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(n.get_ui()) ? Primality::Prime : Primality::Composite;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) ? Primality::ProbablePrime : Primality::Composite;
}

i64 isqrt(i64 n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

}  // namespace quadrex
