#pragma once

#include <gmpxx.h>

#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

// floor(log(p)^2)
i64 default_window(i64 p);

// S_h(x) = sum_{n=x+1}^{x+h} chi_p(n) for x in [0, p), arguments taken mod p.
std::vector<i64> excess_ensemble(i64 p, i64 h);

// Normal moments: prod_{i <= r/2} (2i - 1) for even r, 0 for odd r.
i64 mu_r(int r);

struct Moments {
  i64 p = 0, h = 0;
  std::vector<mpz_class> power_sums;  // power_sums[r] = sum_x S_h(x)^r, r in [0, r_max]
  // (1/p) sum (S_h / sqrt h)^r
  double moment(int r) const;
};

Moments empirical_moments(i64 p, i64 h, int r_max);

struct MomentBoundCheck {
  i64 p = 0, h = 0;
  int r = 0;
  double odd_sum = 0, odd_bound = 0;   // |sum S^(2r-1)| <= 2r h^(2r) sqrt p
  double even_sum = 0, even_lo = 0, even_hi = 0;
  bool odd_ok = false, even_ok = false;
};

MomentBoundCheck moment_bound_check(i64 p, i64 h, int r);

double normal_cdf(double x);

struct CdfRow {
  double lambda = 0, empirical = 0, normal = 0;
};

struct CdfReport {
  i64 p = 0, h = 0;
  std::vector<CdfRow> rows;
  double sup_distance = 0;
};

// Empirical CDF of S_h / sqrt h against the standard normal on the grid.
CdfReport cdf_report(i64 p, i64 h, const std::vector<double>& grid);
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace quadrex
