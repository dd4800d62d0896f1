#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

using Rational = boost::rational<i64>;

// A real character given by its values over one period.
struct PeriodicCharacter {
  i64 modulus = 1;
  std::vector<std::int8_t> values;

  int operator()(i64 n) const { return values[static_cast<std::size_t>(mod(n, modulus))]; }
};

PeriodicCharacter legendre_character(i64 p);
PeriodicCharacter chi4_character();
PeriodicCharacter pointwise_product(const PeriodicCharacter& a, const PeriodicCharacter& b);

// Basic characters attached to the primary discriminants -4, 8, -8 and p* = +-p.
int basic_character(i64 primary, i64 n);

struct RealPrimitiveCharacter {
  i64 d = 1;
  i64 modulus = 1;
  std::vector<i64> primary_factors;

  int operator()(i64 n) const;
  PeriodicCharacter table() const;
};

// d must be a fundamental discriminant.
RealPrimitiveCharacter real_character(i64 d);
std::vector<i64> primary_factors(i64 d);

struct LSeriesEstimate {
  double value = 0;
  double tail_bound = 0;  // |L(1, chi) - value| <= tail_bound
  u64 terms = 0;
};

LSeriesEstimate L1_truncated(const PeriodicCharacter& chi, u64 terms);
LSeriesEstimate L1_truncated(const RealPrimitiveCharacter& chi, u64 terms);

std::complex<double> gauss_sum(i64 n, i64 p);

// Sum of chi_p(n) over integers strictly between lo and hi.
i64 quadratic_excess(i64 p, Rational lo, Rational hi);

struct SignCheck {
  std::string interval;
  i64 excess = 0;
  int expected_sign = 0;
  bool ok = false;
};

struct SignReport {
  i64 p = 0;
  std::vector<SignCheck> checks;
  bool ok() const;
};

// Positivity of the excess on (0, p/2), (0, p/4), (0, p/3) and the resulting
// sign pattern over halves, thirds and quarters of (0, p). Needs p > 3.
SignReport excess_sign_report(i64 p);

struct ExcessFormulaCheck {
  std::string interval;
  i64 excess = 0;
  double formula = 0;   // coefficient times the truncated L-value
  double bound = 0;     // coefficient times the tail bound, plus float slack
  bool ok = false;
};

// Exact excess against the closed forms in L(1, chi) for the applicable
// intervals (0, p/2), (0, p/4), (0, p/3).
std::vector<ExcessFormulaCheck> excess_vs_lseries(i64 p, u64 terms);

struct ClassNumberIdentity {
  std::string relation;
  i64 excess = 0;
  i64 discriminant = 0;
  i64 class_number = 0;
  i64 expected_excess = 0;  // the class-number side, in the units of the excess
  bool ok = false;
};

// Exact integer identities tying excesses to class numbers of -p, -4p, -3p.
std::vector<ClassNumberIdentity> excess_class_number_identities(i64 p);

}  // namespace quadrex
