#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace quadrex {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

struct Egcd {
  i64 g, x, y;
};

struct EgcdBig {
  mpz_class g, x, y;
};

// g > 0 and a*x + b*y == g.
Egcd extended_gcd(i64 a, i64 b);
EgcdBig extended_gcd(const mpz_class& a, const mpz_class& b);

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

// Reduces a into [0, m).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 mod_inverse(i64 a, i64 m);
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);

// All solutions are (x0 + step_x*n, y0 - step_y*n), n in Z.
struct LinearSolution {
  i64 x0, y0, step_x, step_y;
};
LinearSolution solve_linear_diophantine(i64 a, i64 b, i64 c);

struct Congruence {
  i64 residue;
  i64 modulus;
};

struct BigCongruence {
  mpz_class residue;
  mpz_class modulus;
};

Congruence crt(const std::vector<Congruence>& system);
BigCongruence crt(const std::vector<BigCongruence>& system);

// Moduli need not be coprime; throws IncompatibleError(i, j) on conflict.
Congruence successive_substitution(const std::vector<Congruence>& system);

i64 mod_pow(i64 base, u64 exponent, i64 modulus);
mpz_class mod_pow(const mpz_class& base, const mpz_class& exponent, const mpz_class& modulus);

struct Factorization {
  i64 value = 1;
  int sign = 1;
  std::vector<std::pair<i64, int>> factors;  // ascending primes

  i64 product() const;
};

struct SquarefreeSplit {
  i64 sigma = 1;   // square-free part of |n|
  i64 square = 1;  // sigma * square^2 == |n|
  std::vector<i64> pi_odd;
  std::vector<i64> pi_even;
};

// Pollard-rho iteration budget; read from QUADREX_FACTOR_BUDGET if set.
u64 factor_budget();

Factorization factorize(i64 n);
Factorization factorize(i64 n, u64 rho_budget);
SquarefreeSplit squarefree_split(i64 n);

std::vector<i64> primes_up_to(i64 x);
// Odd primes in [lo, hi].
std::vector<i64> primes_in_range(i64 lo, i64 hi);

bool is_prime(u64 n);

enum class Primality { Composite, Prime, ProbablePrime };
// Exact below 2^64; GMP's Baillie-PSW based test above, flagged ProbablePrime.
Primality primality(const mpz_class& n);

bool is_square(i64 n);
i64 isqrt(i64 n);

}  // namespace quadrex
