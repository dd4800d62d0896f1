#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

struct ResidueTable {
  i64 p = 0;
  std::vector<i64> residues;                // ascending, (p-1)/2 entries
  std::vector<std::pair<i64, i64>> roots;   // residue r -> smallest x with x^2 == r; roots are x, p-x
};

ResidueTable residue_table(i64 p);

// chi_p(n) for n in [0, p), filled by marking squares.
std::vector<std::int8_t> legendre_table(i64 p);

int legendre_euler(i64 a, i64 p);

struct GaussLemmaResult {
  int value;
  i64 s;  // number of k in [1, (p-1)/2] with k*a mod p > p/2
};
GaussLemmaResult legendre_gauss_lemma(i64 a, i64 p);

int chi_minus1(i64 p);
int chi_2(i64 p);

// Jacobi symbol from the factorization of n (odd, positive).
int jacobi(i64 m, i64 n);

struct JacobiTrace {
  std::vector<i64> R;  // R_0 = a, R_1 = b, ..., R_n = 1
  std::vector<int> s;  // s_1 .. s_{n-1}; the closing s_n = 0 is implicit
  mpz_class sigma = 0;
  int value = 1;
};

// Division-sequence evaluation of chi_b(a) for a > b >= 1, b odd, gcd(a, b) = 1.
JacobiTrace jacobi_fast(i64 a, i64 b);

// Same recurrence without recording the trace; any odd b >= 1, a reduced internally.
int jacobi_value(i64 a, i64 b);
int jacobi_value(const mpz_class& a, const mpz_class& b);

// Strip the 2-power, apply the supplement and reciprocity, finish with the
// division sequence. No factoring. a is reduced mod p first.
int legendre_fast(i64 a, i64 p);
int legendre_fast(const mpz_class& a, const mpz_class& p);

}  // namespace quadrex
