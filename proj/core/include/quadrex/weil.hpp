#pragma once

#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

// Monic f(x) = prod (x - r_i) over F_p with distinct roots.
struct WeilPoly {
  i64 p = 0;
  std::vector<i64> roots;

  int degree() const { return static_cast<int>(roots.size()); }
  i64 operator()(i64 x) const;
  // Coefficients mod p, constant term first; leading 1 included.
  std::vector<i64> coefficients() const;
};

WeilPoly weil_poly(i64 p, std::vector<i64> roots);

// Accepts monic coefficients (constant term first) only when f splits into
// distinct linear factors over F_p; rejects repeated factors and irreducible parts.
WeilPoly weil_poly_from_coefficients(i64 p, const std::vector<i64>& coeffs);

i64 complete_weil_sum(const WeilPoly& f);
// sum_{x=0}^{N} chi_p(f(x))
i64 incomplete_weil_sum(const WeilPoly& f, i64 N);
// #{(x, y) in F_p^2 : y^2 = f(x)}
i64 point_count(const WeilPoly& f);

struct WeilBound {
  i64 p = 0;
  int degree = 0;
  i64 sum = 0;
  double bound = 0;
  bool holds = false;
};

// |complete sum| < d sqrt(p)
WeilBound complete_bound(const WeilPoly& f);
// max over N of |incomplete sum| against d (1 + log p) sqrt(p); advisory below p = 101.
WeilBound incomplete_bound(const WeilPoly& f);

}  // namespace quadrex
