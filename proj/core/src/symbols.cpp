#include "quadrex/symbols.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "quadrex/errors.hpp"

namespace quadrex {

namespace {

constexpr i64 kTableBudget = 20000000;

void require_odd_prime(i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

int ctz(i64 v) { return __builtin_ctzll(static_cast<unsigned long long>(v)); }
int ctz(const mpz_class& v) { return static_cast<int>(mpz_scan1(v.get_mpz_t(), 0)); }

unsigned low_bits(i64 v, unsigned mask) { return static_cast<unsigned>(v) & mask; }
unsigned low_bits(const mpz_class& v, unsigned mask) {
  return static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), 8)) & mask;
}

template <class T>
int jacobi_loop(T a, T b) {
  int result = 1;
  a %= b;
  if (a < 0) a += b;
  while (a != 0) {
    int s = ctz(a);
    if (s) {
      if constexpr (std::is_same_v<T, mpz_class>)
        mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
      else
        a >>= s;
      unsigned b8 = low_bits(b, 7);
      if ((s & 1) && (b8 == 3 || b8 == 5)) result = -result;
    }
    if (low_bits(a, 3) == 3 && low_bits(b, 3) == 3) result = -result;
    std::swap(a, b);
    a %= b;
  }
  return b == 1 ? result : 0;
}

template <class T>
int legendre_steps(T a, const T& p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  int s = ctz(a);
  T b = a;
  if constexpr (std::is_same_v<T, mpz_class>)
    mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  else
    b >>= s;
  // eps = s(p^2-1)/8 + (p-1)(b-1)/4, only its parity matters
  unsigned p8 = low_bits(p, 7);
  int eps = 0;
  if ((s & 1) && (p8 == 3 || p8 == 5)) eps ^= 1;
  if (low_bits(p, 3) == 3 && low_bits(b, 3) == 3) eps ^= 1;
  int tail = b == 1 ? 1 : jacobi_loop<T>(p, b);
  return eps ? -tail : tail;
}

}  // namespace

ResidueTable residue_table(i64 p) {
  require_odd_prime(p);
  if (p > kTableBudget) throw Error(Errc::BudgetExceeded, "residue table too large");
  ResidueTable t;
  t.p = p;
  for (i64 x = 1; x <= (p - 1) / 2; ++x) t.roots.emplace_back(mul_mod(x, x, p), x);
  std::sort(t.roots.begin(), t.roots.end());
  for (auto& [r, x] : t.roots) t.residues.push_back(r);
  return t;
}

std::vector<std::int8_t> legendre_table(i64 p) {
  require_odd_prime(p);
  if (p > kTableBudget * 10) throw Error(Errc::BudgetExceeded, "character table too large");
  std::vector<std::int8_t> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  // consecutive squares differ by odd numbers
  i64 sq = 0;
  for (i64 x = 1; x <= (p - 1) / 2; ++x) {
    sq += 2 * x - 1;
    if (sq >= p) sq %= p;
    chi[static_cast<std::size_t>(sq)] = 1;
  }
  return chi;
}

int legendre_euler(i64 a, i64 p) {
  require_odd_prime(p);
  i64 r = mod_pow(a, static_cast<u64>((p - 1) / 2), p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

GaussLemmaResult legendre_gauss_lemma(i64 a, i64 p) {
  require_odd_prime(p);
  if (p > kTableBudget) throw Error(Errc::BudgetExceeded, "Gauss lemma evaluator is table-bounded");
  i64 am = mod(a, p);
  if (am == 0) throw Error(Errc::NotCoprime, std::to_string(p) + " divides " + std::to_string(a));
  i64 s = 0, r = 0;
  for (i64 k = 1; k <= (p - 1) / 2; ++k) {
    r += am;
    if (r >= p) r -= p;
    if (2 * r > p) ++s;
  }
  return {s % 2 ? -1 : 1, s};
}

int chi_minus1(i64 p) {
  require_odd_prime(p);
  return p % 4 == 1 ? 1 : -1;
}

int chi_2(i64 p) {
  require_odd_prime(p);
  i64 r = p % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

int jacobi(i64 m, i64 n) {
  if (n <= 0 || n % 2 == 0) throw Error(Errc::InvalidArgument, "jacobi needs an odd positive modulus");
  if (n == 1) return 1;
  int v = 1;
  for (auto [p, e] : factorize(n).factors) {
    int l = legendre_euler(m, p);
    if (l == 0) return 0;
    if (e % 2 && l < 0) v = -v;
  }
  return v;
}

JacobiTrace jacobi_fast(i64 a, i64 b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "jacobi_fast: b must be positive");
  if (b % 2 == 0) throw Error(Errc::InvalidArgument, "jacobi_fast: b must be odd");
  if (a <= b) throw Error(Errc::InvalidArgument, "jacobi_fast: a must exceed b");
  if (gcd(a, b) != 1) throw Error(Errc::NotCoprime, "jacobi_fast: gcd(a, b) must be 1");
  JacobiTrace t;
  t.R = {a, b};
  while (t.R.back() != 1) {
    i64 prev = t.R[t.R.size() - 2], cur = t.R.back();
    i64 r = prev % cur;
    int s = ctz(r);
    t.s.push_back(s);
    t.R.push_back(r >> s);
  }
  // sigma = sum_{i=1}^{n-1} s_i (R_i^2-1)/8 + (R_i-1)(R_{i+1}-1)/4
  for (std::size_t i = 1; i + 1 < t.R.size(); ++i) {
    mpz_class Ri(static_cast<long>(t.R[i])), Rn(static_cast<long>(t.R[i + 1]));
    t.sigma += t.s[i - 1] * ((Ri * Ri - 1) / 8) + (Ri - 1) * (Rn - 1) / 4;
  }
  t.value = mpz_odd_p(t.sigma.get_mpz_t()) ? -1 : 1;
  return t;
}

int jacobi_value(i64 a, i64 b) {
  if (b < 1 || b % 2 == 0) throw Error(Errc::InvalidArgument, "jacobi needs an odd positive modulus");
  return jacobi_loop<i64>(a, b);
}

int jacobi_value(const mpz_class& a, const mpz_class& b) {
  if (b < 1 || mpz_even_p(b.get_mpz_t())) throw Error(Errc::InvalidArgument, "jacobi needs an odd positive modulus");
  return jacobi_loop<mpz_class>(a, b);
}

int legendre_fast(i64 a, i64 p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "legendre_fast needs an odd prime");
  return legendre_steps<i64>(a, p);
}

int legendre_fast(const mpz_class& a, const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) throw Error(Errc::InvalidArgument, "legendre_fast needs an odd prime");
  return legendre_steps<mpz_class>(a, p);
}

}  // namespace quadrex
