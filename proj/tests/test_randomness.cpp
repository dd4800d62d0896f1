#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/randomness.hpp"

using namespace quadrex;

TEST_CASE("excess ensemble") {
  auto S = excess_ensemble(7, 2);
  CHECK(S[0] == 2);
  for (i64 p : oracle::odd_primes(3, 400))
    for (i64 h = 1; h < p; h += 1 + p / 17) {
      auto e = excess_ensemble(p, h);
      i64 total = 0;
      for (i64 x = 0; x < p; ++x) {
        i64 direct = 0;
        for (i64 n = x + 1; n <= x + h; ++n) direct += oracle::legendre(n, p);
        REQUIRE(e[static_cast<std::size_t>(x)] == direct);
        REQUIRE(std::abs(e[static_cast<std::size_t>(x)]) <= h);
        total += e[static_cast<std::size_t>(x)];
      }
      REQUIRE(total == 0);
    }
  for (i64 p : {1009, 4999, 9973})
    for (i64 h : {i64{1}, i64{5}, i64{77}, p - 1}) {
      i64 total = 0;
      for (i64 v : excess_ensemble(p, h)) total += v;
      REQUIRE(total == 0);
    }
  CHECK_THROWS_AS(excess_ensemble(7, 7), Error);
  CHECK_THROWS_AS(excess_ensemble(9, 2), Error);
}

TEST_CASE("moments") {
  CHECK(mu_r(2) == 1);
  CHECK(mu_r(4) == 3);
  CHECK(mu_r(6) == 15);
  CHECK(mu_r(3) == 0);
  CHECK(default_window(10007) == 84);
  auto m = empirical_moments(10007, default_window(10007), 4);
  CHECK(std::fabs(m.moment(2) - 1) <= 0.15);
  CHECK(m.moment(0) == doctest::Approx(1.0));
  CHECK(std::fabs(m.moment(1)) < 1e-12);

  auto small = empirical_moments(101, 10, 6);
  auto S = excess_ensemble(101, 10);
  for (int r = 0; r <= 6; ++r) {
    mpz_class direct = 0;
    for (i64 v : S) {
      mpz_class t = 1;
      for (int k = 0; k < r; ++k) t *= v;
      direct += t;
    }
    REQUIRE(small.power_sums[static_cast<std::size_t>(r)] == direct);
  }
}

TEST_CASE("moment envelope") {
  CHECK(moment_bound_check(101, 10, 2).odd_ok);
  CHECK(moment_bound_check(101, 10, 2).even_ok);
  CHECK(moment_bound_check(499, 20, 3).odd_ok);
  CHECK(moment_bound_check(499, 20, 3).even_ok);
  CHECK_THROWS_AS(moment_bound_check(101, 2, 2), Error);
  for (i64 p : oracle::odd_primes(5, 200))
    for (int r = 1; r <= 3; ++r)
      for (i64 h = r + 1; h < p; ++h) {
        auto c = moment_bound_check(p, h, r);
        REQUIRE(c.odd_ok);
        REQUIRE(c.even_ok);
      }
}

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::fabs(normal_cdf(1) - 0.841344746) < 1e-7);
  CHECK(std::fabs(normal_cdf(-1.96) - 0.0249978951) < 1e-7);
  auto g = uniform_grid(-1, 1, 0.5);
  CHECK(g.size() == 5);
  CHECK(g.back() == doctest::Approx(1.0));
}

TEST_CASE("cdf distances") {
  const i64 p = 100003;
  auto good = cdf_report(p, default_window(p), uniform_grid(-3, 3, 0.05));
  CHECK(good.sup_distance < 0.1);
  auto control = cdf_report(p, 1, uniform_grid(-3, 3, 0.05));
  CHECK(control.sup_distance > 0.3);
  for (const auto& r : good.rows) {
    REQUIRE(r.empirical >= 0);
    REQUIRE(r.empirical <= 1);
  }
}
