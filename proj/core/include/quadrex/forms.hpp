#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

// a x^2 + b xy + c y^2
struct QForm {
  i64 a = 0, b = 0, c = 0;

  i64 disc() const { return b * b - 4 * a * c; }
  bool primitive() const { return gcd(gcd(a, b), c) == 1; }
  i64 operator()(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
  auto operator<=>(const QForm&) const = default;
};

bool is_fundamental(i64 d);

// One reduced primitive positive-definite form per class; d < 0, d == 0 or 1 mod 4.
std::vector<QForm> reduced_forms(i64 d);

int automorph_count(i64 d);

struct PellSolution {
  i64 d = 0;
  mpz_class t0 = 0, u0 = 0;     // minimal positive solution of t^2 - d u^2 = 4
  long double log_epsilon = 0;  // epsilon = (t0 + u0 sqrt d) / 2
  bool minus_solvable = false;  // t^2 - d u^2 = -4 has a solution
};

// d > 0 non-square.
PellSolution pell_min(i64 d);
bool pell_minus_solvable(i64 d);

struct RepresentationCount {
  i64 formula = 0;
  i64 lattice = -1;  // enumeration over the reduced system; d > 0 leaves it at -1
};

// Representations of n > 0 by a full system of forms of fundamental discriminant d.
RepresentationCount representation_count(i64 n, i64 d);

struct ClassNumber {
  i64 d = 0;
  i64 h = 0;
  bool analytic = false;   // true when obtained by inverting the L-value formula
  double estimate = 0;
  double error_bound = 0;
  u64 terms = 0;
};

// Form class number of a fundamental discriminant. d > 0 goes through
// L(1, chi) * sqrt(d) / log(epsilon); throws RoundingUnsafe if the
// truncation error does not pin down an integer.
ClassNumber class_number(i64 d, u64 terms = 0);

// Class number of the quadratic field of discriminant d.
i64 field_class_number(i64 d);

}  // namespace quadrex
