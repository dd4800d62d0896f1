#pragma once

#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

// All solution sets are ascending and free of duplicates.

std::vector<i64> sqrt_mod_p(i64 z, i64 p);
std::vector<i64> sqrt_mod_prime_power(i64 z, i64 p, int alpha);
std::vector<i64> sqrt_mod_composite(i64 z, i64 n);

std::vector<i64> solve_quadratic_mod_p(i64 a, i64 b, i64 c, i64 p);
std::vector<i64> solve_quadratic_mod_m(i64 a, i64 b, i64 c, i64 m);

}  // namespace quadrex
