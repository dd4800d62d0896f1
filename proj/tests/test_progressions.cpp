#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/progressions.hpp"

using namespace quadrex;
using V = std::vector<i64>;

namespace {

// |U b_i^-1 S_i| by direct rational arithmetic
i64 union_size(const APFamilySpec& spec) {
  std::set<Rational> all;
  for (std::size_t i = 0; i < spec.B.size(); ++i)
    for (i64 x : spec.S[i]) all.insert(Rational(x, spec.B[i]));
  return static_cast<i64>(all.size());
}

i64 alpha_of(const APFamilySpec& spec) {
  i64 a = 0;
  for (const auto& s : spec.S) a += static_cast<i64>(s.size());
  return a;
}

i64 q_scan(i64 p, const APFamilySpec& spec, int eps) {
  i64 r = p;
  for (std::size_t i = 0; i < spec.B.size(); ++i) r = std::min(r, (p - 1 - *std::max_element(spec.S[i].begin(), spec.S[i].end())) / spec.B[i]);
  i64 count = 0;
  for (i64 n = 1; n <= r; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < spec.B.size() && ok; ++i)
      for (i64 x : spec.S[i]) ok = ok && oracle::legendre(spec.B[i] * n + x, p) == eps;
    count += ok;
  }
  return count;
}

StandardTuple random_admissible(oracle::Gen& g) {
  for (;;) {
    std::size_t m = static_cast<std::size_t>(g.range(2, 5));
    StandardTuple t;
    t.b = g.distinct(m, 1, 12);
    for (std::size_t i = 0; i < m; ++i) t.a.push_back(g.range(0, 40));
    // keep the quotients close so that overlaps are common
    for (std::size_t i = 0; i < m; ++i) t.a[i] = t.b[i] * g.range(0, 6) + t.a[i] % t.b[i];
    if (is_admissible(t)) return t;
  }
}

}  // namespace

TEST_CASE("pattern counts") {
  auto c = count_patterns_ap_b({1}, 2, 17, {1, 1});
  CHECK(c.c_eps == 3);
  auto w = progression_offsets({1, 2, 3, 5, 7}, 6);
  CHECK(w.size() == 19);
  auto big = count_patterns_ap_b({1, 2, 3, 5, 7}, 6, 101, std::vector<int>(19, 1));
  CHECK(big.gamma == 19);
  CHECK(big.support_exponent == 36);
  CHECK_THROWS_AS(count_patterns_ap_b({1}, 2, 17, {1}), Error);

  oracle::Gen g(61);
  for (int i = 0; i < 200; ++i) {
    i64 p = g.prime(11, 400);
    V b = g.distinct(static_cast<std::size_t>(g.range(1, 3)), 1, 4);
    int s = static_cast<int>(g.range(1, 3));
    auto offs = progression_offsets(b, s);
    if (offs.back() + 2 > p) continue;
    std::vector<int> eps;
    for (std::size_t k = 0; k < offs.size(); ++k) eps.push_back(g.coin() ? 1 : -1);
    int sign = g.coin() ? 1 : -1;
    auto got = count_patterns_ap_b(b, s, p, eps, sign);
    i64 ce = 0, cs = 0;
    for (i64 n = 1; n + offs.back() <= p - 1; ++n) {
      bool m = true;
      for (std::size_t k = 0; k < offs.size(); ++k) m = m && oracle::legendre(n + offs[k], p) == eps[k];
      ce += m;
      bool sup = true;
      for (i64 x = 0; x <= offs.back(); ++x) {
        bool in = std::find(offs.begin(), offs.end(), x) != offs.end();
        sup = sup && ((oracle::legendre(n + x, p) == sign) == in);
      }
      cs += sup;
    }
    REQUIRE(got.c_eps == ce);
    REQUIRE(got.c_sigma == cs);
  }
}

TEST_CASE("pattern counts approach 2^-gamma p") {
  for (i64 p : {199999, 200003}) {
    auto c = count_patterns_ap_b({1, 2}, 2, p, {1, -1, 1});
    const double ratio = static_cast<double>(c.c_eps) / static_cast<double>(p) / std::ldexp(1.0, -c.gamma);
    CHECK(std::fabs(ratio - 1) <= 0.05);
  }
}

TEST_CASE("family parameters") {
  auto fam = family_from_tuple({0, 1}, {1, 1}, 2);
  REQUIRE(fam.B == V{1});
  CHECK(fam.S[0] == V{0, 1, 2});

  // disjoint pieces
  APFamilySpec disjoint{{1, 2}, {{0, 1}, {7, 9}}};
  auto d = compute_parameters(disjoint);
  CHECK(d.e == 0);
  CHECK(d.Lambda.empty());
  CHECK(d.alpha == 4);

  // two rows with quotient gap q < s overlap in s - q points
  for (int s = 2; s <= 6; ++s)
    for (int q = 1; q < s; ++q) {
      StandardTuple t{{1, 2 * (1 + q)}, {1, 2}};
      auto prm = compute_parameters(family_from_tuple(t.a, t.b, s));
      REQUIRE(prm.e == s - q);
      REQUIRE(quotient_diagram(t, s).e == s - q);
    }
}

TEST_CASE("gap (2,2,3) tuple and generated tuples") {
  auto t = generate_tuple({2, 2, 3}, {2, 3, 5}, 1, 1);
  auto q = quotient_diagram(t, 5);
  CHECK(q.e == 8);
  CHECK(q.alpha - q.e == 12);
  CHECK(q.Lambda == std::vector<IndexMask>{0b0011, 0b0101, 0b0110, 0b1100});
  REQUIRE(q.blocks.size() == 1);
  auto prm = compute_parameters(family_from_tuple(t.a, t.b, 5));
  CHECK(prm.e == 8);
  CHECK(prm.Lambda == q.Lambda);

  for (i64 n : {2, 3}) {
    auto g = generate_tuple({2, 2, 3, 5, 2, 2, 3}, V(7, n * n), 1, 1);
    V expect{1, 3, 5, 8, 13, 15, 17, 20};
    i64 pw = 1;
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(g.a[i] == expect[i] * pw);
      CHECK(g.b[i] == pw);
      pw *= n * n;
    }
  }
  auto wide = generate_tuple({5, 5}, {3, 3}, 1, 1);
  CHECK(wide.a == V{1, 18, 99});
  CHECK(quotient_diagram(wide, 5).e == 0);
  CHECK(quotient_diagram(wide, 5).blocks.empty());

  for (int k = 2; k <= 6; ++k) {
    // minimal overlap: every gap s - 1
    auto tm = generate_tuple(V(static_cast<std::size_t>(k - 1), 3), V(static_cast<std::size_t>(k - 1), 2), 1, 1);
    CHECK(quotient_diagram(tm, 4).e == k - 1);
    // maximal overlap: s = k, unit gaps
    auto tx = generate_tuple(V(static_cast<std::size_t>(k - 1), 1), V(static_cast<std::size_t>(k - 1), 2), 1, 1);
    auto qx = quotient_diagram(tx, k);
    CHECK(qx.alpha == k * k);
    CHECK(qx.e == (k - 1) * (k - 1));
  }
  CHECK_THROWS_AS(quotient_diagram({{1, 2}, {1, 2}}, 3), Error);
}

TEST_CASE("two e computations and the union identity agree") {
  oracle::Gen g(62);
  for (int i = 0; i < 300; ++i) {
    auto t = random_admissible(g);
    int s = static_cast<int>(g.range(1, 6));
    auto spec = family_from_tuple(t.a, t.b, s);
    auto prm = compute_parameters(spec);
    auto q = quotient_diagram(t, s);
    REQUIRE(q.e == prm.e);
    REQUIRE(q.alpha == prm.alpha);
    REQUIRE(q.Lambda == prm.Lambda);
    REQUIRE(prm.alpha == alpha_of(spec));
    REQUIRE(prm.alpha - prm.e == union_size(spec));
  }
  for (int i = 0; i < 300; ++i) {
    APFamilySpec spec;
    for (i64 b : g.distinct(static_cast<std::size_t>(g.range(1, 4)), 1, 6)) {
      spec.B.push_back(b);
      spec.S.push_back(g.distinct(static_cast<std::size_t>(g.range(1, 4)), 0, 12));
    }
    auto prm = compute_parameters(spec);
    REQUIRE(prm.alpha - prm.e == union_size(spec));
  }
}

TEST_CASE("q_eps counts, classes and the zero count on minus primes") {
  oracle::Gen g(63);
  for (int i = 0; i < 40; ++i) {
    auto t = random_admissible(g);
    int s = static_cast<int>(g.range(1, 4));
    auto spec = family_from_tuple(t.a, t.b, s);
    auto prm = compute_parameters(spec);
    for (i64 p : oracle::odd_primes(101, 400)) {
      const i64 qp = count_q_epsilon(p, spec, 1), qm = count_q_epsilon(p, spec, -1);
      REQUIRE(qp == q_scan(p, spec, 1));
      REQUIRE(qm == q_scan(p, spec, -1));
      PrimeClass c = classify(p, spec, prm);
      bool divides = false;
      for (i64 b : spec.B) divides = divides || b % p == 0;
      REQUIRE((c == PrimeClass::NotAllowable) == divides);
      if (c == PrimeClass::Minus) {
        REQUIRE(qp == 0);
        REQUIRE(qm == 0);
      }
    }
  }
  // square products: every allowable prime is plus
  auto sq = generate_tuple({2, 2}, {4, 9}, 1, 1);
  auto spec = family_from_tuple(sq.a, sq.b, 5);
  auto prm = compute_parameters(spec);
  for (i64 p : oracle::odd_primes(5, 500))
    if (p != 3) REQUIRE(classify(p, spec, prm) == PrimeClass::Plus);
  CHECK(classify(3, spec, prm) == PrimeClass::NotAllowable);
  CHECK(std::string(prime_class_name(PrimeClass::Minus)) == "minus");
}

TEST_CASE("plus-class densities") {
  auto one = generate_tuple({2}, {2}, 1, 1);
  auto d1 = pi_plus_density(one, 5, 100000);
  CHECK(d1.blocks == 1);
  CHECK(d1.block_rows == 2);
  CHECK(d1.theoretical == doctest::Approx(0.5));
  auto tol = [](const PlusDensity& d, double v) {
    return 3 * std::sqrt(v * (1 - v) / static_cast<double>(d.allowable));
  };
  CHECK(std::fabs(d1.empirical() - 0.5) <= tol(d1, 0.5));

  auto two = generate_tuple({2, 2, 5, 2}, {2, 3, 5, 7}, 1, 1);
  auto d2 = pi_plus_density(two, 5, 100000);
  CHECK(d2.blocks == 2);
  CHECK(d2.block_rows == 5);
  CHECK(d2.independent_model == doctest::Approx(0.125));
  CHECK(std::fabs(d2.empirical() - d2.independent_model) <= tol(d2, d2.independent_model));

  CHECK_THROWS_AS(pi_plus_density(generate_tuple({2}, {4}, 1, 1), 5, 1000), Error);
  CHECK_THROWS_AS(pi_plus_density(generate_tuple({2, 2}, {2, 2}, 1, 1), 5, 1000), Error);
}
