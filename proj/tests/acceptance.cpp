// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quadrex/analytic.hpp"
#include "quadrex/arith.hpp"
#include "quadrex/density.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/forms.hpp"
#include "quadrex/progressions.hpp"
#include "quadrex/randomness.hpp"
#include "quadrex/reciprocity.hpp"
#include "quadrex/roots.hpp"
#include "quadrex/symbols.hpp"
#include "quadrex/weil.hpp"
#include "quadrex/zkp.hpp"

using namespace quadrex;
using V = std::vector<i64>;

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  int failures = 0;
  std::ostringstream first;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
  template <class T>
  void note(const std::string& key, const T& v) {
    info << ' ' << key << '=' << v;
  }
};

int run(int id, const char* name, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %2d %-34s %8.2fs%s", c.failures ? "FAIL" : "PASS", id, name, secs, c.info.str().c_str());
  if (c.failures) std::printf(" | %d failure(s): %s", c.failures, c.first.str().c_str());
  std::printf("\n");
  std::fflush(stdout);
  return c.failures ? 1 : 0;
}

std::string S(i64 v) { return std::to_string(v); }

std::vector<i64> primes_after(i64 x, std::size_t n) {
  std::vector<i64> out;
  for (i64 p = x + 1; out.size() < n; ++p)
    if (is_prime(static_cast<u64>(p))) out.push_back(p);
  return out;
}

void worked_values(Check& c) {
  c.expect(legendre_fast(365, 1847) == 1, "chi_1847(365)");
  c.expect((496 * 496 - 365) == 133 * 1847, "witness 496");
  c.expect(sqrt_mod_p(365, 1847) == V{496, 1847 - 496}, "roots of 365 mod 1847");

  auto tr = jacobi_fast(311, 141);
  c.expect(tr.value == 1 && legendre_fast(141, 311) == 1, "chi_311(141)");
  c.expect(tr.R == V{311, 141, 29, 25, 1}, "trace R");
  c.expect(tr.s == std::vector<int>{0, 0, 2}, "trace s");

  c.expect(mod_pow(15, 402, 1607) == 838, "15^402 mod 1607");
  c.expect(mod_pow(mpz_class(15), mpz_class(402), mpz_class(1607)) == 838, "15^402 mod 1607 (mpz)");

  auto t17 = residue_table(17);
  c.expect(t17.residues == V{1, 2, 4, 8, 9, 13, 15, 16}, "residues of 17");
  auto t37 = residue_table(37);
  c.expect(t37.residues == V{1, 3, 4, 7, 9, 10, 11, 12, 16, 21, 25, 26, 27, 28, 30, 33, 34, 36}, "residues of 37");
  for (const auto* t : {&t17, &t37}) {
    c.expect(t->roots.size() == t->residues.size(), "root map size");
    for (auto [r, x] : t->roots) {
      c.expect(x * x % t->p == r && x <= t->p / 2, "root map entry " + S(r) + " mod " + S(t->p));
      c.expect(sqrt_mod_p(r, t->p) == V{x, t->p - x}, "sqrt_mod_p agrees with table");
    }
  }
}

void basic_tables(Check& c) {
  auto f7 = fundamental_problem(7);
  c.expect(f7.plus.modulus == 28 && f7.plus.classes == V{1, 3, 9, 19, 25, 27}, "X+(7)");
  c.expect(f7.minus.modulus == 28 && f7.minus.classes == V{5, 11, 13, 15, 17, 23}, "X-(7)");
  auto f17 = fundamental_problem(17);
  c.expect(f17.plus.modulus == 17 && f17.plus.classes == V{1, 2, 4, 8, 9, 13, 15, 16}, "X+(17)");
  c.expect(f17.minus.classes == V{3, 5, 6, 7, 10, 11, 12, 14}, "X-(17)");
  auto b126 = basic_problem(126);
  c.expect(b126.plus.modulus == 56 && b126.plus.classes == V{1, 5, 9, 11, 13, 25, 31, 43, 45, 47, 51, 55}, "X+(126)");
  c.expect(b126.minus.classes == V{3, 15, 17, 19, 23, 27, 29, 33, 37, 39, 41, 53}, "X-(126)");
  c.expect(b126.plus.excluded_primes == V{3} && b126.minus.excluded_primes == V{3}, "126 excludes 3");

  i64 checked = 0;
  for (auto [d, sets] : {std::pair{i64{7}, f7}, {i64{17}, f17}, {i64{126}, b126}}) {
    auto a = verify_class_set(sets.plus, d, 100000, 1);
    auto b = verify_class_set(sets.minus, d, 100000, -1);
    c.expect(a.counterexamples.empty() && b.counterexamples.empty(), "counterexample for d=" + S(d));
    checked += a.primes_checked;
  }
  c.note("primes_checked", checked);
}

void symbol_consistency(Check& c) {
  i64 pairs = 0;
  for (i64 p : oracle::odd_primes(3, 997)) {
    auto table = residue_table(p);
    std::vector<bool> is_res(static_cast<std::size_t>(p), false);
    for (i64 r : table.residues) is_res[static_cast<std::size_t>(r)] = true;
    for (i64 a = 1; a < p; ++a) {
      const int t = is_res[static_cast<std::size_t>(a)] ? 1 : -1;
      const int e = legendre_euler(a, p), g = legendre_gauss_lemma(a, p).value, f = legendre_fast(a, p);
      c.expect(t == e && e == g && g == f, "evaluators disagree at (" + S(a) + "|" + S(p) + ")");
      ++pairs;
    }
  }
  c.note("pairs", pairs);
  auto ps = oracle::odd_primes(3, 500);
  for (i64 p : ps)
    for (i64 q : ps) {
      if (p == q) continue;
      const int sign = ((p - 1) / 2 * ((q - 1) / 2)) % 2 ? -1 : 1;
      c.expect(legendre_fast(q, p) * legendre_fast(p, q) == sign, "LQR " + S(p) + "," + S(q));
    }
  for (i64 m = 3; m <= 400; m += 2)
    for (i64 n = 3; n <= 400; n += 2) {
      if (oracle::gcd(m, n) != 1) continue;
      const int sign = ((m - 1) / 2 * ((n - 1) / 2)) % 2 ? -1 : 1;
      c.expect(jacobi(m, n) * jacobi(n, m) == sign, "Jacobi reciprocity " + S(m) + "," + S(n));
      c.expect(jacobi(m, n) == oracle::jacobi(m, n) && jacobi_value(m, n) == jacobi(m, n), "Jacobi value " + S(m) + "," + S(n));
    }
}

void densities(Check& c) {
  const i64 X = 1000000;
  const V S1{3, 15, 35, 77}, S2{3, 33, 105, 1155}, S3{33, 35, 1155};
  struct Row {
    const char* label;
    V set;
    DensityMode mode;
    Density th;
    double expect;
  };
  std::vector<Row> rows{
      {"S1+", S1, DensityMode::AllResidues, density_residue_set(S1), 1.0 / 16},
      {"S2+", S2, DensityMode::AllResidues, density_residue_set(S2), 1.0 / 8},
      {"S3+", S3, DensityMode::AllResidues, density_residue_set(S3), 1.0 / 4},
      {"S1-", S1, DensityMode::AllNonResidues, density_nonresidue_set(S1), 1.0 / 16},
      {"S2-", S2, DensityMode::AllNonResidues, density_nonresidue_set(S2), 1.0 / 8},
      {"S3-", S3, DensityMode::AllNonResidues, density_nonresidue_set(S3), 0},
      {"{2,3,6}-", {2, 3, 6}, DensityMode::AllNonResidues, density_nonresidue_set({2, 3, 6}), 0},
      {"{4}-", {4}, DensityMode::AllNonResidues, density_nonresidue_set({4}), 0},
      {"{2,8}-", {2, 8}, DensityMode::AllNonResidues, density_nonresidue_set({2, 8}), 0.5},
  };
  for (const auto& r : rows) {
    c.expect(r.th.value() == r.expect, std::string("theoretical ") + r.label);
    auto e = empirical_density(r.set, r.mode, X);
    if (r.th.obstructed) c.expect(e.matching == 0, std::string("obstructed set matched: ") + r.label);
    c.expect(std::fabs(e.ratio() - r.th.value()) <= 0.01, std::string("empirical ") + r.label + " = " + std::to_string(e.ratio()));
    c.note(r.label, e.ratio());
  }
  auto pat = empirical_density({2, 3, 5}, DensityMode::Pattern, X, {1, -1, -1});
  c.expect(std::fabs(pat.ratio() - density_pattern({2, 3, 5}, {1, -1, -1}).value()) <= 0.01, "pattern {2,3,5}");
}

void solvers(Check& c) {
  oracle::Gen g(2024);
  int instances = 0;
  while (instances < 10000) {
    const i64 m = g.range(2, 1000);
    switch (instances % 5) {
      case 0: {
        const i64 z = g.range(-2000, 2000);
        c.expect(sqrt_mod_composite(z, m) == oracle::sqrt_scan(z, m), "sqrt " + S(z) + " mod " + S(m));
        break;
      }
      case 1: {
        const i64 a = g.range(-1000, 1000), b = g.range(-1000, 1000), cc = g.range(-1000, 1000);
        if (mod(a, m) == 0) continue;
        c.expect(solve_quadratic_mod_m(a, b, cc, m) == oracle::quadratic_scan(a, b, cc, m), "quadratic mod " + S(m));
        break;
      }
      case 2: {
        const i64 p = g.prime(3, 997);
        const i64 a = g.range(1, p - 1), b = g.range(0, p - 1), cc = g.range(0, p - 1);
        c.expect(solve_quadratic_mod_p(a, b, cc, p) == oracle::quadratic_scan(a, b, cc, p), "quadratic mod p=" + S(p));
        break;
      }
      case 3: {
        // pairwise coprime moduli with product <= 1000
        std::vector<Congruence> sys;
        std::vector<std::pair<i64, i64>> raw;
        i64 L = 1;
        for (int k = 0; k < 3; ++k) {
          const i64 mk = g.range(2, 30);
          if (oracle::gcd(mk, L) != 1 || L * mk > 1000) continue;
          const i64 r = g.range(-50, 50);
          sys.push_back({r, mk});
          raw.push_back({oracle::md(r, mk), mk});
          L *= mk;
        }
        if (sys.empty()) continue;
        auto got = crt(sys);
        c.expect(got.modulus == L && got.residue == oracle::crt_scan(raw), "crt");
        auto sub = successive_substitution(sys);
        c.expect(sub.modulus == L && sub.residue == got.residue, "successive substitution");
        break;
      }
      case 4: {
        const i64 a = g.range(1, m - 1);
        i64 inv = -1;
        for (i64 x = 1; x < m && inv < 0; ++x)
          if (a * x % m == 1) inv = x;
        if (inv < 0) {
          bool threw = false;
          try {
            mod_inverse(a, m);
          } catch (const Error&) {
            threw = true;
          }
          c.expect(threw, "inverse of non-unit");
        } else {
          c.expect(mod_inverse(a, m) == inv, "inverse " + S(a) + " mod " + S(m));
        }
        const i64 b = g.range(1, 1000), rhs = g.range(-1000, 1000);
        bool solvable = false;
        for (i64 x = 0; x < b && !solvable; ++x) solvable = oracle::md(rhs - a * x, b) == 0;
        try {
          auto s = solve_linear_diophantine(a, b, rhs);
          c.expect(solvable && a * s.x0 + b * s.y0 == rhs && a * s.step_x - b * s.step_y == 0, "linear diophantine");
        } catch (const Error&) {
          c.expect(!solvable, "linear diophantine missed a solution");
        }
        break;
      }
    }
    ++instances;
  }
  c.note("instances", instances);
}

void forms_analytic(Check& c) {
  c.expect(class_number(-20).h == 2 && reduced_forms(-20).size() == 2, "h(-20)");
  c.expect(class_number(-23).h == 3 && reduced_forms(-23).size() == 3, "h(-23)");
  c.expect(class_number(8).h == 1, "h(8)");

  int discs = 0;
  double worst = 0;
  for (i64 d = -200; d < 0; ++d) {
    if (!is_fundamental(d)) continue;
    const i64 h = static_cast<i64>(reduced_forms(d).size());
    c.expect(h == oracle::class_number(d), "h(" + S(d) + ") vs scan");
    const double w = automorph_count(d);
    auto L = L1_truncated(real_character(d), 1000000);
    const double formula = 2 * std::numbers::pi * static_cast<double>(h) / (w * std::sqrt(static_cast<double>(-d)));
    const double r = std::fabs(L.value - formula);
    c.expect(r <= L.tail_bound, "class number formula at d=" + S(d));
    worst = std::max(worst, r / L.tail_bound);
    ++discs;
  }
  c.note("discs", discs);
  c.note("worst_residual/tail", worst);

  for (i64 p : oracle::odd_primes(3, 1000)) {
    auto g = gauss_sum(1, p);
    const bool sign_ok = p % 4 == 1 ? (g.real() > 0 && std::fabs(g.imag()) < 1e-6) : (g.imag() > 0 && std::fabs(g.real()) < 1e-6);
    c.expect(sign_ok && std::fabs(std::abs(g) - std::sqrt(static_cast<double>(p))) < 1e-6, "gauss sum sign at p=" + S(p));
  }

  i64 reports = 0, identities = 0;
  for (i64 p : oracle::odd_primes(5, 10000)) {
    auto r = excess_sign_report(p);
    c.expect(r.ok(), "sign report violation at p=" + S(p));
    ++reports;
  }
  for (i64 p : oracle::odd_primes(5, 1000))
    for (const auto& id : excess_class_number_identities(p)) {
      c.expect(id.ok && id.class_number == oracle::class_number(id.discriminant), "identity " + id.relation + " at p=" + S(p));
      ++identities;
    }
  c.note("sign_reports", reports);
  c.note("identities", identities);
}

void weil(Check& c) {
  auto check = [&](const WeilPoly& f) {
    const i64 s = complete_weil_sum(f);
    c.expect(std::fabs(static_cast<double>(s)) < f.degree() * std::sqrt(static_cast<double>(f.p)), "Weil bound p=" + S(f.p));
    c.expect(point_count(f) == f.p + s, "point count p=" + S(f.p));
  };
  i64 exhaustive = 0;
  for (i64 p : oracle::odd_primes(3, 61))
    for (i64 a = 0; a < p; ++a) {
      check(weil_poly(p, {a}));
      for (i64 b = a + 1; b < p; ++b) {
        check(weil_poly(p, {a, b}));
        for (i64 d = b + 1; d < p; ++d) check(weil_poly(p, {a, b, d}));
        exhaustive += p - b;
      }
    }
  oracle::Gen g(77);
  for (int i = 0; i < 10000; ++i) {
    const i64 p = g.prime(3, 10000);
    auto roots = g.distinct(static_cast<std::size_t>(g.range(1, std::min<i64>(6, p))), 0, p - 1);
    auto f = weil_poly(p, roots);
    check(f);
    if (i % 100 == 0) c.expect(complete_weil_sum(f) == oracle::weil_sum(p, roots), "sum vs direct at p=" + S(p));
  }
  c.note("exhaustive_polys", exhaustive);
  c.note("random", 10000);
}

void progressions(Check& c) {
  auto overlap = generate_tuple({2, 2, 3}, {2, 3, 5}, 1, 1);
  auto q = quotient_diagram(overlap, 5);
  c.expect(q.e == 8 && q.alpha - q.e == 12, "gaps (2,2,3), s=5: e");
  c.expect(q.Lambda == std::vector<IndexMask>{0b0011, 0b0101, 0b0110, 0b1100}, "gaps (2,2,3), s=5: Lambda");

  struct Regime {
    const char* label;
    StandardTuple t;
  };
  std::vector<Regime> regimes{{"disjoint", generate_tuple({2}, {2}, 1, 1)},
                              {"square", generate_tuple({1}, {4}, 1, 1)},
                              {"nonsquare", generate_tuple({1}, {2}, 1, 1)}};
  i64 minus_seen = 0;
  for (const auto& r : regimes) {
    auto spec = family_from_tuple(r.t.a, r.t.b, 2);
    auto prm = compute_parameters(spec);
    int plus_samples = 0;
    double lo = 10, hi = 0;
    for (i64 p : primes_after(1000000, 40)) {
      const PrimeClass cls = classify(p, spec, prm);
      for (int eps : {1, -1}) {
        const i64 qe = count_q_epsilon(p, spec, eps);
        if (cls == PrimeClass::Minus) {
          c.expect(qe == 0, std::string(r.label) + ": nonzero count on a minus prime " + S(p));
          continue;
        }
        if (plus_samples >= 3) continue;
        const double ratio = static_cast<double>(qe) * static_cast<double>(prm.b_max) * std::ldexp(1.0, static_cast<int>(prm.alpha - prm.e)) / static_cast<double>(p);
        c.expect(ratio >= 0.9 && ratio <= 1.1, std::string(r.label) + ": ratio " + std::to_string(ratio) + " at " + S(p));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      if (cls == PrimeClass::Minus) ++minus_seen;
      else if (cls == PrimeClass::Plus) ++plus_samples;
    }
    c.expect(plus_samples >= 3, std::string(r.label) + ": fewer than three plus primes");
    c.note(std::string(r.label) + "_ratio", "[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  c.expect(minus_seen > 0, "no minus primes scanned");

  // zero counts on every minus prime below 5000 for the (2,2,3) family and a random batch
  oracle::Gen g(88);
  std::vector<APFamilySpec> fams{family_from_tuple(overlap.a, overlap.b, 5), family_from_tuple(regimes[2].t.a, regimes[2].t.b, 3)};
  for (int i = 0; i < 20; ++i) {
    auto t = generate_tuple({g.range(1, 3)}, {g.range(2, 7)}, 1, 1);
    fams.push_back(family_from_tuple(t.a, t.b, static_cast<int>(g.range(2, 4))));
  }
  for (const auto& spec : fams) {
    auto prm = compute_parameters(spec);
    for (i64 p : oracle::odd_primes(3, 5000)) {
      if (classify(p, spec, prm) != PrimeClass::Minus) continue;
      ++minus_seen;
      c.expect(count_q_epsilon(p, spec, 1) == 0 && count_q_epsilon(p, spec, -1) == 0, "zero count on minus prime " + S(p));
    }
  }
  c.note("minus_primes", minus_seen);

  int agreed = 0;
  while (agreed < 500) {
    const std::size_t m = static_cast<std::size_t>(g.range(2, 6));
    StandardTuple t;
    t.b = g.distinct(m, 1, 15);
    for (std::size_t i = 0; i < m; ++i) t.a.push_back(t.b[i] * g.range(0, 6) + g.range(0, t.b[i] - 1));
    if (!is_admissible(t)) continue;
    const int s = static_cast<int>(g.range(1, 6));
    auto prm = compute_parameters(family_from_tuple(t.a, t.b, s));
    auto qd = quotient_diagram(t, s);
    c.expect(qd.e == prm.e && qd.Lambda == prm.Lambda && prm.alpha - prm.e == prm.union_size, "e mismatch on tuple " + S(agreed));
    ++agreed;
  }
  c.note("tuples", agreed);
}

void randomness(Check& c) {
  i64 cases = 0;
  for (i64 p : oracle::odd_primes(5, 1000))
    for (int r = 1; r <= 3; ++r)
      for (i64 h = r + 1; h < p; ++h) {
        auto m = moment_bound_check(p, h, r);
        c.expect(m.odd_ok && m.even_ok, "moment envelope p=" + S(p) + " h=" + S(h) + " r=" + S(r));
        ++cases;
      }
  c.note("envelope_cases", cases);

  const i64 p = primes_after(1000000, 1).front();
  const i64 h = default_window(p);
  const double L = std::log(static_cast<double>(p));
  c.expect(h == static_cast<i64>(std::floor(L * L)), "window is floor(log^2 p)");
  auto m = empirical_moments(p, h, 4);
  c.expect(std::fabs(m.moment(2) - 1) <= 0.15, "m2 = " + std::to_string(m.moment(2)));
  c.expect(std::fabs(m.moment(4) - 3) <= 0.6, "m4 = " + std::to_string(m.moment(4)));
  auto cdf = cdf_report(p, h, uniform_grid(-3, 3, 0.01));
  c.expect(cdf.sup_distance <= 0.05, "sup CDF distance = " + std::to_string(cdf.sup_distance));
  c.note("p", p);
  c.note("h", h);
  c.note("m2", m.moment(2));
  c.note("m4", m.moment(4));
  c.note("sup_cdf", cdf.sup_distance);
}

void zkp(Check& c) {
  int honest = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    auto k = keygen(32, mpz_class(1000 + static_cast<long>(seed)), rng);
    auto s = honest_session(k, 30, rng);
    c.expect(s.status == SessionStatus::Accepted, "honest session rejected, seed " + std::to_string(seed));
    honest += s.status == SessionStatus::Accepted;
  }
  Rng rng(4242);
  auto k = keygen(32, 271828, rng);
  auto pub = public_part(k);
  const int single = 100000;
  int pass = 0;
  for (int i = 0; i < single; ++i) pass += impostor_accepted(pub, 1, rng);
  const double rate = static_cast<double>(pass) / single;
  c.expect(std::fabs(rate - 0.5) <= 0.01, "impostor rate " + std::to_string(rate));
  const int sessions = 1000000;
  int accepted = 0;
  for (int i = 0; i < sessions; ++i) accepted += impostor_accepted(pub, 30, rng);
  c.expect(accepted == 0, "30-round impostor accepted " + std::to_string(accepted) + " times");
  c.note("honest", honest);
  c.note("impostor_rate", rate);
  c.note("accepted_30", accepted);
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "worked values", worked_values);
  failed += run(2, "basic problem tables", basic_tables);
  failed += run(3, "symbol consistency", symbol_consistency);
  failed += run(4, "densities at X=1e6", densities);
  failed += run(5, "congruence solvers vs scans", solvers);
  failed += run(6, "forms and analytic identities", forms_analytic);
  failed += run(7, "Weil bounds and point counts", weil);
  failed += run(8, "progression counts", progressions);
  failed += run(9, "excess moments and CDF", randomness);
  failed += run(10, "identification protocol", zkp);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed ? 1 : 0;
}
