#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/reciprocity.hpp"
#include "quadrex/symbols.hpp"

using namespace quadrex;
using V = std::vector<i64>;

TEST_CASE("fundamental problem") {
  auto a = fundamental_problem(17);
  CHECK(a.plus.modulus == 17);
  CHECK(a.plus.classes == V{1, 2, 4, 8, 9, 13, 15, 16});
  auto b = fundamental_problem(7);
  CHECK(b.plus.modulus == 28);
  CHECK(b.plus.classes == V{1, 3, 9, 19, 25, 27});
  CHECK(b.minus.classes == V{5, 11, 13, 15, 17, 23});
  auto c = fundamental_problem(2);
  CHECK(c.plus.classes == V{1, 7});
  CHECK(c.minus.classes == V{3, 5});
  CHECK(c.minus.modulus == 8);
  auto d = fundamental_problem(-1);
  CHECK(d.plus.modulus == 4);
  CHECK(d.plus.classes == V{1});
  CHECK(d.minus.classes == V{3});
  CHECK_THROWS_AS(fundamental_problem(9), Error);
}

TEST_CASE("basic problem worked values") {
  auto x = basic_problem(126);
  CHECK(x.plus.modulus == 56);
  CHECK(x.plus.classes == V{1, 5, 9, 11, 13, 25, 31, 43, 45, 47, 51, 55});
  CHECK(x.plus.excluded_primes == V{3});
  CHECK(x.minus.classes == V{3, 15, 17, 19, 23, 27, 29, 33, 37, 39, 41, 53});
  CHECK(x.minus.excluded_primes == V{3});
  CHECK(class_modulus(126) == 56);

  auto sq = basic_problem(36);
  CHECK(sq.plus.modulus == 1);
  CHECK(sq.plus.contains(5));
  CHECK_FALSE(sq.plus.contains(3));
  CHECK(sq.minus.classes.empty());

  auto j = nlohmann::json::parse(x.plus.to_json());
  CHECK(j["modulus"] == "56");
  CHECK(j["classes"].size() == 12);
  CHECK(j["excluded_primes"][0] == "3");
}

TEST_CASE("class sets agree with the symbol for |d| <= 200") {
  for (i64 d = -200; d <= 200; ++d) {
    if (d == 0) continue;
    auto x = basic_problem(d);
    const bool square = d > 0 && is_square(d);
    if (!square) {
      const i64 m = x.plus.modulus;
      i64 units = 0;
      for (i64 r = 1; r < m; ++r) units += oracle::gcd(r, m) == 1;
      REQUIRE(2 * x.plus.classes.size() == static_cast<std::size_t>(units));
      REQUIRE(x.minus.classes.size() == x.plus.classes.size());
      for (i64 r : x.plus.classes) REQUIRE(oracle::gcd(r, m) == 1);
    }
    for (i64 p : oracle::odd_primes(3, 3000)) {
      if (d % p == 0) {
        REQUIRE_FALSE(x.plus.contains(p));
        REQUIRE_FALSE(x.minus.contains(p));
        continue;
      }
      int chi = oracle::legendre(d, p);
      REQUIRE(x.plus.contains(p) == (chi == 1));
      REQUIRE(x.minus.contains(p) == (chi == -1));
    }
  }
}

TEST_CASE("every class holds a small prime") {
  for (i64 d : {-1, 2, 3, 5, 7, -7, 10, 126, -126, 30, -210}) {
    auto x = basic_problem(d);
    for (const auto* set : {&x.plus, &x.minus})
      for (i64 r : set->classes) {
        bool found = false;
        for (i64 p = r; p <= 50 * set->modulus && !found; p += set->modulus)
          found = oracle::is_prime(p) && set->contains(p);
        REQUIRE(found);
      }
  }
}

TEST_CASE("verify_class_set") {
  auto x = basic_problem(126);
  CHECK(verify_class_set(x.plus, 126, 10000, 1).counterexamples.empty());
  CHECK(verify_class_set(x.minus, 126, 10000, -1).counterexamples.empty());
  auto f = fundamental_problem(17);
  CHECK(verify_class_set(f.plus, 17, 1000, 1).counterexamples.empty());
  auto broken = x.plus;
  broken.classes.erase(broken.classes.begin() + 3);
  broken.classes.push_back(3);
  std::sort(broken.classes.begin(), broken.classes.end());
  CHECK_FALSE(verify_class_set(broken, 126, 10000, 1).counterexamples.empty());
}
