#include "quadrex/randomness.hpp"

#include <algorithm>
#include <cmath>

#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

void check_window(i64 p, i64 h) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  if (h <= 0 || h >= p) throw Error(Errc::InvalidArgument, "need 0 < h < p");
}

// counts[v + h] = #{x : S_h(x) = v}
std::vector<i64> histogram(const std::vector<i64>& S, i64 h) {
  std::vector<i64> counts(static_cast<std::size_t>(2 * h + 1), 0);
  for (i64 v : S) ++counts[static_cast<std::size_t>(v + h)];
  return counts;
}

}  // namespace

i64 default_window(i64 p) {
  double l = std::log(static_cast<double>(p));
  return static_cast<i64>(std::floor(l * l));
}

std::vector<i64> excess_ensemble(i64 p, i64 h) {
  check_window(p, h);
  auto chi = legendre_table(p);
  auto at = [&](i64 n) { return static_cast<i64>(chi[static_cast<std::size_t>(n % p)]); };
  std::vector<i64> S(static_cast<std::size_t>(p));
  i64 s = 0;
  for (i64 n = 1; n <= h; ++n) s += at(n);
  for (i64 x = 0; x < p; ++x) {
    S[static_cast<std::size_t>(x)] = s;
    s += at(x + h + 1) - at(x + 1);
  }
  return S;
}

i64 mu_r(int r) {
  if (r < 0) throw Error(Errc::InvalidArgument, "r must be nonnegative");
  if (r % 2) return 0;
  i64 m = 1;
  for (int i = 1; i <= r / 2; ++i) m *= 2 * i - 1;
  return m;
}

double Moments::moment(int r) const {
  mpf_class num(power_sums.at(static_cast<std::size_t>(r)), 256);
  double v = num.get_d() / static_cast<double>(p);
  return v / std::pow(static_cast<double>(h), r / 2.0);
}

Moments empirical_moments(i64 p, i64 h, int r_max) {
  if (r_max < 0 || r_max > 8) throw Error(Errc::InvalidArgument, "r_max must lie in [0, 8]");
  auto counts = histogram(excess_ensemble(p, h), h);
  Moments m{p, h, std::vector<mpz_class>(static_cast<std::size_t>(r_max) + 1, 0)};
  for (i64 v = -h; v <= h; ++v) {
    i64 c = counts[static_cast<std::size_t>(v + h)];
    if (!c) continue;
    mpz_class term = c;
    for (int r = 0; r <= r_max; ++r) {
      m.power_sums[static_cast<std::size_t>(r)] += term;
      term *= v;
    }
  }
  return m;
}

MomentBoundCheck moment_bound_check(i64 p, i64 h, int r) {
  if (r < 1 || r >= h) throw Error(Errc::InvalidArgument, "need 1 <= r < h");
  Moments m = empirical_moments(p, h, 2 * r);
  MomentBoundCheck c;
  c.p = p;
  c.h = h;
  c.r = r;
  const double sp = std::sqrt(static_cast<double>(p));
  const double hd = static_cast<double>(h);
  const double err = 2.0 * r * std::pow(hd, 2 * r) * sp;
  const double mu = static_cast<double>(mu_r(2 * r));
  c.odd_sum = m.power_sums[static_cast<std::size_t>(2 * r - 1)].get_d();
  c.even_sum = m.power_sums[static_cast<std::size_t>(2 * r)].get_d();
  c.odd_bound = err;
  c.even_lo = static_cast<double>(p - r) * std::pow(hd - r, r) * mu - err;
  c.even_hi = static_cast<double>(p) * std::pow(hd, r) * mu + err;
  c.odd_ok = std::fabs(c.odd_sum) <= c.odd_bound;
  c.even_ok = c.even_lo <= c.even_sum && c.even_sum <= c.even_hi;
  return c;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw Error(Errc::InvalidArgument, "bad grid");
  std::vector<double> g;
  const auto n = static_cast<i64>(std::floor((hi - lo) / step + 1e-9));
  for (i64 i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

CdfReport cdf_report(i64 p, i64 h, const std::vector<double>& grid) {
  auto counts = histogram(excess_ensemble(p, h), h);
  // cumulative[v + h] = #{x : S_h(x) <= v}
  std::vector<i64> cumulative(counts.size());
  i64 run = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) cumulative[i] = run += counts[i];
  CdfReport rep;
  rep.p = p;
  rep.h = h;
  const double sh = std::sqrt(static_cast<double>(h));
  for (double lambda : grid) {
    // largest integer v with v <= lambda sqrt h
    auto v = static_cast<i64>(std::floor(lambda * sh));
    double below = v < -h ? 0.0 : v >= h ? static_cast<double>(p) : static_cast<double>(cumulative[static_cast<std::size_t>(v + h)]);
    CdfRow row{lambda, below / static_cast<double>(p), normal_cdf(lambda)};
    rep.sup_distance = std::max(rep.sup_distance, std::fabs(row.empirical - row.normal));
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace quadrex
