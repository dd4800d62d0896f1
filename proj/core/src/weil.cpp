#include "quadrex/weil.hpp"

#include <algorithm>
#include <cmath>

#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

void require_odd_prime(i64 p) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, "p must be an odd prime");
}

std::vector<std::int8_t> values_of(const WeilPoly& f) {
  auto chi = legendre_table(f.p);
  std::vector<std::int8_t> v(static_cast<std::size_t>(f.p));
  for (i64 x = 0; x < f.p; ++x) v[static_cast<std::size_t>(x)] = chi[static_cast<std::size_t>(f(x))];
  return v;
}

}  // namespace

i64 WeilPoly::operator()(i64 x) const {
  i64 v = 1;
  for (i64 r : roots) v = mul_mod(v, mod(x - r, p), p);
  return v;
}

std::vector<i64> WeilPoly::coefficients() const {
  std::vector<i64> c{1};
  for (i64 r : roots) {
    std::vector<i64> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = mod(next[i + 1] + c[i], p);
      next[i] = mod(next[i] - mul_mod(c[i], r, p), p);
    }
    c.swap(next);
  }
  return c;
}

WeilPoly weil_poly(i64 p, std::vector<i64> roots) {
  require_odd_prime(p);
  if (roots.empty()) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  for (i64& r : roots) r = mod(r, p);
  std::vector<i64> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::InvalidArgument, "roots must be distinct mod p");
  return {p, std::move(roots)};
}

WeilPoly weil_poly_from_coefficients(i64 p, const std::vector<i64>& coeffs) {
  require_odd_prime(p);
  if (coeffs.size() < 2 || mod(coeffs.back(), p) != 1)
    throw Error(Errc::InvalidArgument, "need a monic polynomial of degree >= 1");
  std::vector<i64> roots;
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = mod(mul_mod(v, x, p) + mod(*it, p), p);
    if (v == 0) roots.push_back(x);
  }
  if (roots.size() + 1 != coeffs.size())
    throw Error(Errc::InvalidArgument, "polynomial is not a product of distinct linear factors mod p");
  WeilPoly f{p, roots};
  std::vector<i64> c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != mod(coeffs[i], p)) throw Error(Errc::InvalidArgument, "polynomial has a repeated factor");
  return f;
}

i64 complete_weil_sum(const WeilPoly& f) { return incomplete_weil_sum(f, f.p - 1); }

i64 incomplete_weil_sum(const WeilPoly& f, i64 N) {
  if (N < 0 || N >= f.p) throw Error(Errc::InvalidArgument, "N must lie in [0, p-1]");
  auto chi = legendre_table(f.p);
  i64 s = 0;
  for (i64 x = 0; x <= N; ++x) s += chi[static_cast<std::size_t>(f(x))];
  return s;
}

i64 point_count(const WeilPoly& f) {
  // number of square roots of each value
  std::vector<i64> roots_of(static_cast<std::size_t>(f.p), 0);
  for (i64 y = 0; y < f.p; ++y) ++roots_of[static_cast<std::size_t>(mul_mod(y, y, f.p))];
  i64 n = 0;
  for (i64 x = 0; x < f.p; ++x) n += roots_of[static_cast<std::size_t>(f(x))];
  return n;
}

WeilBound complete_bound(const WeilPoly& f) {
  WeilBound b{f.p, f.degree(), complete_weil_sum(f), 0, false};
  b.bound = f.degree() * std::sqrt(static_cast<double>(f.p));
  b.holds = std::fabs(static_cast<double>(b.sum)) < b.bound;
  return b;
}

WeilBound incomplete_bound(const WeilPoly& f) {
  auto v = values_of(f);
  i64 s = 0, worst = 0;
  for (auto c : v) {
    s += c;
    if (std::llabs(s) > std::llabs(worst)) worst = s;
  }
  const double lp = std::log(static_cast<double>(f.p));
  WeilBound b{f.p, f.degree(), worst, f.degree() * (1 + lp) * std::sqrt(static_cast<double>(f.p)), false};
  b.holds = std::fabs(static_cast<double>(worst)) <= b.bound;
  return b;
}

}  // namespace quadrex
