#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
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
using namespace quadrex::cli;

namespace {

struct Globals {
  bool csv = false;
  bool json_flag = false;
  u64 seed = 1;
  int jobs = 1;
  i64 prime_bound = 0;  // 0: each command picks its own default
  u64 terms = 1000000;
};

Globals G;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 bound_or(i64 fallback) { return G.prime_bound > 0 ? G.prime_bound : fallback; }

mpz_class parse_big(const std::string& s) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("not an integer: " + s);
  return v;
}

bool fits_i64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

json mask_json(IndexMask m) {
  json a = json::array();
  for (int i = 0; i < 32; ++i)
    if (m >> i & 1u) a.push_back(str(i + 1));
  return a;
}

std::string mask_text(IndexMask m) {
  std::string s = "{";
  for (int i = 0; i < 32; ++i)
    if (m >> i & 1u) s += (s.size() > 1 ? " " : "") + std::to_string(i + 1);
  return s + "}";
}

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? str(r.numerator()) : str(r.numerator()) + "/" + str(r.denominator());
}

// symbol ---------------------------------------------------------------------

struct SymbolArgs {
  std::string a, p;
  bool fast = false, euler = false, gauss = false, jacobi = false;
};

Output run_symbol(const SymbolArgs& s) {
  const mpz_class a = parse_big(s.a), p = parse_big(s.p);
  std::string method = s.euler ? "euler" : s.gauss ? "gauss" : s.jacobi ? "jacobi" : "fast";
  Output out;
  out.doc["a"] = a.get_str();
  out.doc["p"] = p.get_str();
  out.doc["method"] = method;
  const bool small = fits_i64(a) && fits_i64(p);
  if (method == "euler" || method == "gauss") {
    if (!small) throw Error(Errc::InvalidArgument, method + " evaluation needs 64-bit arguments");
    const i64 ai = a.get_si(), pi = p.get_si();
    if (pi < 3 || !is_prime(static_cast<u64>(pi))) throw Error(Errc::InvalidArgument, "p must be an odd prime");
    if (method == "euler") {
      out.doc["value"] = str(legendre_euler(ai, pi));
    } else {
      auto g = legendre_gauss_lemma(ai, pi);
      out.doc["value"] = str(g.value);
      out.doc["s"] = str(g.s);
    }
    return out;
  }
  if (method == "jacobi") {
    out.doc["value"] = str(small ? jacobi_value(a.get_si(), p.get_si()) : jacobi_value(a, p));
    return out;
  }
  if (small) {
    const i64 ai = a.get_si(), pi = p.get_si();
    if (pi < 3 || !is_prime(static_cast<u64>(pi))) throw Error(Errc::InvalidArgument, "p must be an odd prime");
    out.doc["value"] = str(legendre_fast(ai, pi));
    if (ai > 1 && ai < pi && ai % 2 == 1 && gcd(ai, pi) == 1) {
      JacobiTrace t = jacobi_fast(pi, ai);
      out.doc["R"] = strs(t.R);
      json sv = json::array();
      for (int x : t.s) sv.push_back(str(x));
      out.doc["s"] = sv;
    }
  } else {
    if (primality(p) == Primality::Composite) throw Error(Errc::InvalidArgument, "p must be an odd prime");
    out.doc["value"] = str(legendre_fast(a, p));
  }
  return out;
}

// sqrt / solve ---------------------------------------------------------------

Output roots_output(json doc, const std::vector<i64>& roots) {
  Output out;
  out.doc = std::move(doc);
  out.doc["roots"] = strs(roots);
  out.header = {"root"};
  for (i64 r : roots) out.rows.push_back({str(r)});
  return out;
}

Output run_sqrt(i64 z, i64 n) {
  json d;
  d["z"] = str(z);
  d["n"] = str(n);
  return roots_output(d, sqrt_mod_composite(z, n));
}

Output run_solve_quadratic(i64 a, i64 b, i64 c, i64 m) {
  json d;
  d["a"] = str(a);
  d["b"] = str(b);
  d["c"] = str(c);
  d["m"] = str(m);
  return roots_output(d, solve_quadratic_mod_m(a, b, c, m));
}

Output run_solve_linear(i64 a, i64 b, i64 c) {
  auto s = solve_linear_diophantine(a, b, c);
  Output out;
  out.doc["x0"] = str(s.x0);
  out.doc["y0"] = str(s.y0);
  out.doc["step_x"] = str(s.step_x);
  out.doc["step_y"] = str(s.step_y);
  return out;
}

Output run_solve_crt(const std::vector<std::string>& items) {
  std::vector<Congruence> sys;
  for (const auto& it : items) {
    auto colon = it.find(':');
    if (colon == std::string::npos) throw UsageError("congruences are written r:m, got " + it);
    try {
      sys.push_back({std::stoll(it.substr(0, colon)), std::stoll(it.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("congruences are written r:m, got " + it);
    }
  }
  Congruence c = successive_substitution(sys);
  Output out;
  out.doc["residue"] = str(c.residue);
  out.doc["modulus"] = str(c.modulus);
  return out;
}

// xset -----------------------------------------------------------------------

Output run_xset(i64 d, bool verify) {
  ClassSetPair pair = basic_problem(d);
  Output out;
  out.doc["d"] = str(d);
  out.doc["plus"] = json::parse(pair.plus.to_json());
  out.doc["minus"] = json::parse(pair.minus.to_json());
  out.header = {"sign", "modulus", "classes", "excluded_primes"};
  out.rows.push_back({"+", str(pair.plus.modulus), csv_cell(strs(pair.plus.classes)), csv_cell(strs(pair.plus.excluded_primes))});
  out.rows.push_back({"-", str(pair.minus.modulus), csv_cell(strs(pair.minus.classes)), csv_cell(strs(pair.minus.excluded_primes))});
  if (verify) {
    const i64 X = bound_or(100000);
    auto vp = verify_class_set(pair.plus, d, X, 1);
    auto vm = verify_class_set(pair.minus, d, X, -1);
    json v;
    v["prime_bound"] = str(X);
    v["primes_checked"] = str(vp.primes_checked);
    v["plus_counterexamples"] = strs(vp.counterexamples);
    v["minus_counterexamples"] = strs(vm.counterexamples);
    out.doc["verification"] = v;
    out.header.push_back("counterexamples");
    out.rows[0].push_back(str(static_cast<i64>(vp.counterexamples.size())));
    out.rows[1].push_back(str(static_cast<i64>(vm.counterexamples.size())));
  }
  return out;
}

// density --------------------------------------------------------------------

Output run_density(const std::vector<i64>& S, const std::string& mode, const std::vector<int>& signs) {
  Density th;
  DensityMode m;
  if (mode == "residues") {
    th = density_residue_set(S);
    m = DensityMode::AllResidues;
  } else if (mode == "nonresidues") {
    th = density_nonresidue_set(S);
    m = DensityMode::AllNonResidues;
  } else {
    th = density_pattern(S, signs);
    m = DensityMode::Pattern;
  }
  const i64 X = bound_or(1000000);
  auto emp = empirical_density(S, m, X, signs);
  const double theoretical = th.value();
  Output out;
  out.doc["set"] = strs(S);
  out.doc["mode"] = mode;
  out.doc["obstructed"] = th.obstructed;
  out.doc["exponent"] = str(th.exponent);
  out.doc["prime_bound"] = str(X);
  out.doc["primes"] = str(emp.primes);
  out.doc["matching"] = str(emp.matching);
  out.doc["theoretical"] = theoretical;
  out.doc["empirical"] = emp.ratio();
  out.doc["abs_error"] = std::fabs(emp.ratio() - theoretical);
  out.header = {"prime_bound", "theoretical", "empirical", "abs_error"};
  out.rows.push_back({str(X), num(theoretical), num(emp.ratio()), num(std::fabs(emp.ratio() - theoretical))});
  return out;
}

// forms ----------------------------------------------------------------------

struct FormsRow {
  i64 d = 0, h = 0, w = 0, field_h = 0;
  double L = 0, formula = 0, tail = 0;
  std::vector<QForm> reduced;
};

FormsRow forms_row(i64 d) {
  if (!is_fundamental(d)) throw Error(Errc::InvalidArgument, "d = " + str(d) + " is not a fundamental discriminant");
  FormsRow r;
  r.d = d;
  if (d < 0) {
    r.reduced = reduced_forms(d);
    r.h = static_cast<i64>(r.reduced.size());
    r.w = automorph_count(d);
    auto L = L1_truncated(real_character(d), std::max<u64>(G.terms, static_cast<u64>(-d)));
    r.L = L.value;
    r.tail = L.tail_bound;
    r.formula = 2 * std::numbers::pi * static_cast<double>(r.h) / (static_cast<double>(r.w) * std::sqrt(static_cast<double>(-d)));
    r.field_h = r.h;
  } else {
    ClassNumber cn = class_number(d);
    PellSolution pell = pell_min(d);
    r.h = cn.h;
    r.w = 2;
    auto L = L1_truncated(real_character(d), std::max<u64>(G.terms, cn.terms));
    r.L = L.value;
    r.tail = L.tail_bound;
    r.formula = static_cast<double>(r.h) * static_cast<double>(pell.log_epsilon) / std::sqrt(static_cast<double>(d));
    r.field_h = field_class_number(d);
  }
  return r;
}

Output run_forms(const std::vector<i64>& ds, bool show_reduced) {
  auto rows = parallel_map<FormsRow>(ds.size(), G.jobs, [&](std::size_t i) { return forms_row(ds[i]); });
  Output out;
  out.header = {"d", "h", "w", "L_estimate", "residual", "tail_bound", "field_h"};
  json all = json::array();
  for (const auto& r : rows) {
    json j;
    j["d"] = str(r.d);
    j["h"] = str(r.h);
    j["w"] = str(r.w);
    j["field_h"] = str(r.field_h);
    j["L_estimate"] = r.L;
    j["formula"] = r.formula;
    j["residual"] = r.L - r.formula;
    j["tail_bound"] = r.tail;
    if (show_reduced && r.d < 0) {
      json fs = json::array();
      for (const auto& f : r.reduced) fs.push_back(json::array({str(f.a), str(f.b), str(f.c)}));
      j["reduced_forms"] = fs;
    }
    all.push_back(j);
    out.rows.push_back({str(r.d), str(r.h), str(r.w), num(r.L), num(r.L - r.formula), num(r.tail), str(r.field_h)});
  }
  out.doc["terms"] = str(static_cast<i64>(G.terms));
  out.doc["forms"] = all;
  return out;
}

// excess ---------------------------------------------------------------------

json excess_detail(i64 p) {
  json j;
  j["p"] = str(p);
  SignReport rep = excess_sign_report(p);
  json signs = json::array();
  for (const auto& c : rep.checks)
    signs.push_back({{"interval", c.interval}, {"excess", str(c.excess)}, {"expected_sign", str(c.expected_sign)}, {"ok", c.ok}});
  j["signs"] = signs;
  json ls = json::array();
  for (const auto& c : excess_vs_lseries(p, std::max<u64>(G.terms, static_cast<u64>(12 * p))))
    ls.push_back({{"interval", c.interval}, {"excess", str(c.excess)}, {"formula", c.formula}, {"bound", c.bound}, {"ok", c.ok}});
  j["lseries"] = ls;
  json ids = json::array();
  for (const auto& c : excess_class_number_identities(p))
    ids.push_back({{"relation", c.relation},
                   {"excess", str(c.excess)},
                   {"discriminant", str(c.discriminant)},
                   {"class_number", str(c.class_number)},
                   {"expected_excess", str(c.expected_excess)},
                   {"ok", c.ok}});
  j["identities"] = ids;
  return j;
}

struct SweepRow {
  i64 p = 0;
  i64 half = 0;
  bool signs_ok = false, identities_ok = false;
};

Output run_excess(const std::vector<i64>& ps, i64 lo, i64 hi) {
  Output out;
  if (!ps.empty()) {
    json all = json::array();
    out.header = {"p", "check", "interval", "excess", "ok"};
    for (i64 p : ps) {
      json j = excess_detail(p);
      auto add = [&](const char* kind, const json& list, const char* label) {
        for (const auto& c : list)
          out.rows.push_back({str(p), kind, c[label].get<std::string>(), c["excess"].get<std::string>(), c["ok"].dump()});
      };
      add("sign", j["signs"], "interval");
      add("lseries", j["lseries"], "interval");
      add("identity", j["identities"], "relation");
      all.push_back(j);
    }
    out.doc["primes"] = all;
    return out;
  }
  if (lo < 5) lo = 5;
  if (hi < lo) throw Error(Errc::InvalidArgument, "empty sweep range");
  auto primes = primes_in_range(lo, hi);
  auto rows = parallel_map<SweepRow>(primes.size(), G.jobs, [&](std::size_t i) {
    const i64 p = primes[i];
    SweepRow r;
    r.p = p;
    r.half = quadratic_excess(p, Rational(0), Rational(p, 2));
    r.signs_ok = excess_sign_report(p).ok();
    r.identities_ok = true;
    for (const auto& c : excess_class_number_identities(p)) r.identities_ok = r.identities_ok && c.ok;
    return r;
  });
  out.header = {"p", "p_mod_8", "excess_half", "signs_ok", "identities_ok"};
  json violations = json::array();
  for (const auto& r : rows) {
    out.rows.push_back({str(r.p), str(r.p % 8), str(r.half), r.signs_ok ? "true" : "false", r.identities_ok ? "true" : "false"});
    if (!r.signs_ok || !r.identities_ok) violations.push_back(str(r.p));
  }
  out.doc["lo"] = str(lo);
  out.doc["hi"] = str(hi);
  out.doc["primes"] = str(static_cast<i64>(rows.size()));
  out.doc["violations"] = violations;
  return out;
}

// gauss-sum ------------------------------------------------------------------

Output run_gauss(i64 n, i64 p) {
  std::complex<double> g = gauss_sum(n, p);
  const int chi = legendre_fast(mod(n, p), p);
  const double root = std::sqrt(static_cast<double>(p));
  std::complex<double> expected = p % 4 == 1 ? std::complex<double>(chi * root, 0) : std::complex<double>(0, chi * root);
  Output out;
  out.doc["n"] = str(n);
  out.doc["p"] = str(p);
  out.doc["re"] = g.real();
  out.doc["im"] = g.imag();
  out.doc["expected_re"] = expected.real();
  out.doc["expected_im"] = expected.imag();
  out.doc["abs_error"] = std::abs(g - expected);
  return out;
}

// weil -----------------------------------------------------------------------

Output run_weil(i64 p, const std::vector<i64>& roots, const std::vector<i64>& coeffs, i64 N) {
  if (roots.empty() == coeffs.empty()) throw UsageError("give exactly one of --roots and --coeffs");
  WeilPoly f = roots.empty() ? weil_poly_from_coefficients(p, coeffs) : weil_poly(p, roots);
  WeilBound cb = complete_bound(f);
  Output out;
  out.doc["p"] = str(p);
  out.doc["roots"] = strs(f.roots);
  out.doc["coefficients"] = strs(f.coefficients());
  out.doc["degree"] = str(f.degree());
  out.doc["sum"] = str(cb.sum);
  out.doc["bound"] = cb.bound;
  out.doc["holds"] = cb.holds;
  out.doc["point_count"] = str(point_count(f));
  if (N >= 0) out.doc["incomplete_sum"] = str(incomplete_weil_sum(f, N));
  WeilBound ib = incomplete_bound(f);
  out.doc["incomplete_max"] = str(ib.sum);
  out.doc["incomplete_bound"] = ib.bound;
  out.doc["incomplete_holds"] = ib.holds;
  return out;
}

// ap -------------------------------------------------------------------------

std::vector<int> expand_signs(const std::vector<int>& eps, std::size_t n) {
  if (eps.size() == 1) return std::vector<int>(n, eps[0]);
  return eps;
}

Output run_ap_pattern(const std::vector<i64>& b, int s, i64 p, const std::vector<int>& eps, int support) {
  auto offs = progression_offsets(b, s);
  PatternCounts c = count_patterns_ap_b(b, s, p, expand_signs(eps, offs.size()), support);
  Output out;
  out.doc["p"] = str(p);
  out.doc["offsets"] = strs(c.offsets);
  out.doc["gamma"] = str(c.gamma);
  out.doc["support_exponent"] = str(c.support_exponent);
  out.doc["c_eps"] = str(c.c_eps);
  out.doc["c_sigma"] = str(c.c_sigma);
  out.doc["c_eps_over_p"] = static_cast<double>(c.c_eps) / static_cast<double>(p);
  out.doc["two_pow_minus_gamma"] = std::ldexp(1.0, -c.gamma);
  return out;
}

APFamilySpec spec_from_file(const std::string& path, int& s_out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad JSON spec: ") + e.what());
  }
  auto ints = [](const json& a) {
    std::vector<i64> v;
    for (const auto& x : a) v.push_back(x.is_string() ? std::stoll(x.get<std::string>()) : x.get<i64>());
    return v;
  };
  try {
    if (j.contains("B")) {
      APFamilySpec spec;
      spec.B = ints(j.at("B"));
      for (const auto& row : j.at("S")) spec.S.push_back(ints(row));
      return spec;
    }
    s_out = j.at("s").get<int>();
    return family_from_tuple(ints(j.at("a")), ints(j.at("b")), s_out);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad JSON spec: ") + e.what());
  }
}

Output run_ap_family(APFamilySpec spec, const std::vector<i64>& primes) {
  APParameters prm = compute_parameters(spec);
  Output out;
  out.doc["B"] = strs(spec.B);
  json S = json::array();
  for (const auto& row : spec.S) S.push_back(strs(row));
  out.doc["S"] = S;
  out.doc["k"] = str(prm.k);
  out.doc["alpha"] = str(prm.alpha);
  out.doc["e"] = str(prm.e);
  out.doc["alpha_minus_e"] = str(prm.alpha - prm.e);
  out.doc["b_max"] = str(prm.b_max);
  json lam = json::array();
  for (IndexMask m : prm.Lambda) lam.push_back(mask_json(m));
  out.doc["Lambda"] = lam;
  out.doc["cutoff"] = str(prm.cutoff);
  out.header = {"p", "class", "window", "q_plus", "q_minus", "ratio_plus", "ratio_minus"};
  json rows = json::array();
  for (i64 p : primes) {
    PrimeClass cls = classify(p, spec, prm);
    const i64 r = window_count(p, spec);
    const i64 qp = count_q_epsilon(p, spec, 1), qm = count_q_epsilon(p, spec, -1);
    const double scale = static_cast<double>(prm.b_max) * std::ldexp(1.0, static_cast<int>(prm.alpha - prm.e)) / static_cast<double>(p);
    json sig = json::array();
    for (int v : signature(p, spec, prm)) sig.push_back(str(v));
    rows.push_back({{"p", str(p)},
                    {"class", prime_class_name(cls)},
                    {"signature", sig},
                    {"window", str(r)},
                    {"q_plus", str(qp)},
                    {"q_minus", str(qm)},
                    {"ratio_plus", qp * scale},
                    {"ratio_minus", qm * scale}});
    out.rows.push_back({str(p), prime_class_name(cls), str(r), str(qp), str(qm), num(qp * scale), num(qm * scale)});
  }
  out.doc["primes"] = rows;
  return out;
}

Output run_ap_tuple(const std::vector<i64>& d, const std::vector<i64>& t, i64 a1, i64 b1, int s, bool density) {
  StandardTuple tup = generate_tuple(d, t, a1, b1);
  QuotientDiagram q = quotient_diagram(tup, s);
  Output out;
  out.doc["a"] = strs(tup.a);
  out.doc["b"] = strs(tup.b);
  out.doc["s"] = str(s);
  json quot = json::array();
  for (const auto& r : q.quotients) quot.push_back(rational_text(r));
  out.doc["quotients"] = quot;
  json blocks = json::array();
  for (const auto& b : q.blocks) {
    json rows = json::array();
    for (int i : b.rows) rows.push_back(str(i + 1));
    blocks.push_back({{"rows", rows}, {"gaps", strs(b.gaps)}});
  }
  out.doc["blocks"] = blocks;
  out.doc["alpha"] = str(q.alpha);
  out.doc["e"] = str(q.e);
  out.doc["alpha_minus_e"] = str(q.alpha - q.e);
  json lam = json::array();
  std::string lam_text;
  for (IndexMask m : q.Lambda) {
    lam.push_back(mask_json(m));
    lam_text += (lam_text.empty() ? "" : " ") + mask_text(m);
  }
  out.doc["Lambda"] = lam;
  out.header = {"alpha", "e", "alpha_minus_e", "Lambda"};
  out.rows.push_back({str(q.alpha), str(q.e), str(q.alpha - q.e), lam_text});
  if (density) {
    PlusDensity pd = pi_plus_density(tup, s, bound_or(100000));
    out.doc["density"] = {{"prime_bound", str(pd.prime_bound)},
                          {"blocks", str(pd.blocks)},
                          {"block_rows", str(pd.block_rows)},
                          {"theoretical", pd.theoretical},
                          {"independent_model", pd.independent_model},
                          {"allowable", str(pd.allowable)},
                          {"plus", str(pd.plus)},
                          {"empirical", pd.empirical()}};
    out.header.insert(out.header.end(), {"theoretical", "independent_model", "empirical"});
    out.rows[0].insert(out.rows[0].end(), {num(pd.theoretical), num(pd.independent_model), num(pd.empirical())});
  }
  return out;
}

// clt ------------------------------------------------------------------------

Output run_clt(i64 p, i64 h, int r_max, double step) {
  if (h <= 0) h = default_window(p);
  Moments m = empirical_moments(p, h, r_max);
  CdfReport rep = cdf_report(p, h, uniform_grid(-3.0, 3.0, step));
  Output out;
  out.doc["p"] = str(p);
  out.doc["h"] = str(h);
  json ms = json::array();
  for (int r = 1; r <= r_max; ++r) ms.push_back({{"r", str(r)}, {"empirical", m.moment(r)}, {"normal", str(mu_r(r))}});
  out.doc["moments"] = ms;
  out.doc["sup_cdf_distance"] = rep.sup_distance;
  out.header = {"lambda", "empirical_cdf", "normal_cdf"};
  for (const auto& row : rep.rows) out.rows.push_back({num(row.lambda), num(row.empirical), num(row.normal)});
  return out;
}

// zkp ------------------------------------------------------------------------

struct ZkpArgs {
  int rounds = 30;
  unsigned bits = 32;
  std::string id = "1234567";
  std::string p, q;
  i64 trials = 1000;
};

ZkpKeys make_keys(const ZkpArgs& a, Rng& rng) {
  const mpz_class I = parse_big(a.id);
  if (!a.p.empty() || !a.q.empty()) {
    if (a.p.empty() || a.q.empty()) throw UsageError("give both --p and --q");
    return keys_from_primes(parse_big(a.p), parse_big(a.q), I);
  }
  return keygen(a.bits, I, rng);
}

int run_zkp_demo(const ZkpArgs& a) {
  Rng rng(G.seed);
  ZkpKeys keys = make_keys(a, rng);
  ZkpSession s = honest_session(keys, a.rounds, rng);
  const char* status = s.status == SessionStatus::Accepted ? "accepted" : "rejected";
  if (G.csv) {
    std::cout << "round,x,y,b,response,ok\n";
    for (const auto& r : s.rounds)
      std::cout << r.round << ',' << r.x.get_str() << ',' << r.y.get_str() << ',' << r.b << ',' << r.response.get_str() << ','
                << (r.ok ? "true" : "false") << '\n';
    std::cout << "status," << status << '\n';
  } else {
    std::cout << s.transcript_jsonl();
    json summary;
    summary["status"] = status;
    summary["n"] = keys.n.get_str();
    summary["w"] = keys.w.get_str();
    summary["rounds"] = str(static_cast<i64>(s.rounds.size()));
    std::cout << summary.dump() << '\n';
  }
  return 0;
}

Output run_zkp_keygen(const ZkpArgs& a) {
  Rng rng(G.seed);
  ZkpKeys k = make_keys(a, rng);
  Output out;
  for (auto [name, v] : {std::pair{"p", &k.p}, {"q", &k.q}, {"n", &k.n}, {"I", &k.I}, {"c", &k.c}, {"w", &k.w}, {"u", &k.u}})
    out.doc[name] = v->get_str();
  return out;
}

Output run_zkp_impostor(const ZkpArgs& a) {
  if (a.trials < 1) throw Error(Errc::InvalidArgument, "trials must be positive");
  Rng rng(G.seed);
  ZkpPublic pub = public_part(make_keys(a, rng));
  i64 accepted = 0;
  for (i64 i = 0; i < a.trials; ++i) accepted += impostor_accepted(pub, a.rounds, rng);
  Output out;
  out.doc["rounds"] = str(a.rounds);
  out.doc["trials"] = str(a.trials);
  out.doc["accepted"] = str(accepted);
  out.doc["rate"] = static_cast<double>(accepted) / static_cast<double>(a.trials);
  out.doc["expected_rate"] = std::ldexp(1.0, -a.rounds);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadrex: quadratic residues, characters and their applications"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* fmt = app.add_flag("--csv", G.csv, "CSV output");
  app.add_flag("--json", G.json_flag, "JSON output (default)")->excludes(fmt);
  app.add_option("--seed", G.seed, "RNG seed");
  app.add_option("--jobs", G.jobs, "worker threads for sweeps")->check(CLI::Range(1, 256));
  app.add_option("--prime-bound", G.prime_bound, "prime bound X for scans")->check(CLI::PositiveNumber);
  app.add_option("--terms", G.terms, "L-series truncation")->check(CLI::PositiveNumber);

  std::function<Output()> action;
  std::function<int()> raw_action;

  SymbolArgs sym;
  auto* c_symbol = app.add_subcommand("symbol", "Legendre or Jacobi symbol (a/p)");
  c_symbol->add_option("a", sym.a)->required();
  c_symbol->add_option("p", sym.p)->required();
  auto* m1 = c_symbol->add_flag("--fast", sym.fast, "division-sequence evaluation (default)");
  auto* m2 = c_symbol->add_flag("--euler", sym.euler, "Euler's criterion");
  auto* m3 = c_symbol->add_flag("--gauss", sym.gauss, "Gauss's lemma");
  auto* m4 = c_symbol->add_flag("--jacobi", sym.jacobi, "Jacobi symbol for odd composite moduli");
  for (auto* a : {m1, m2, m3, m4})
    for (auto* b : {m1, m2, m3, m4})
      if (a != b) a->excludes(b);
  c_symbol->callback([&] { action = [&] { return run_symbol(sym); }; });

  i64 sq_z = 0, sq_n = 0;
  auto* c_sqrt = app.add_subcommand("sqrt", "all x mod n with x^2 == z");
  c_sqrt->add_option("z", sq_z)->required();
  c_sqrt->add_option("n", sq_n)->required();
  c_sqrt->callback([&] { action = [&] { return run_sqrt(sq_z, sq_n); }; });

  auto* c_solve = app.add_subcommand("solve", "congruence solvers");
  c_solve->require_subcommand(1);
  i64 qa = 0, qb = 0, qc = 0, qm = 0;
  auto* c_quad = c_solve->add_subcommand("quadratic", "a x^2 + b x + c == 0 mod m");
  c_quad->add_option("a", qa)->required();
  c_quad->add_option("b", qb)->required();
  c_quad->add_option("c", qc)->required();
  c_quad->add_option("m", qm)->required();
  c_quad->callback([&] { action = [&] { return run_solve_quadratic(qa, qb, qc, qm); }; });
  i64 la = 0, lb = 0, lc = 0;
  auto* c_lin = c_solve->add_subcommand("linear", "a x + b y = c over the integers");
  c_lin->add_option("a", la)->required();
  c_lin->add_option("b", lb)->required();
  c_lin->add_option("c", lc)->required();
  c_lin->callback([&] { action = [&] { return run_solve_linear(la, lb, lc); }; });
  std::vector<std::string> congruences;
  auto* c_crt = c_solve->add_subcommand("crt", "x == r_i mod m_i, moduli need not be coprime");
  c_crt->add_option("congruences", congruences, "r:m pairs")->required();
  c_crt->callback([&] { action = [&] { return run_solve_crt(congruences); }; });

  i64 xd = 0;
  bool xverify = false;
  auto* c_xset = app.add_subcommand("xset", "primes p with (d/p) = +1 and -1 as residue classes");
  c_xset->add_option("d", xd)->required();
  c_xset->add_flag("--verify", xverify, "scan primes up to --prime-bound (default 1e5)");
  c_xset->callback([&] { action = [&] { return run_xset(xd, xverify); }; });

  std::vector<i64> dset;
  std::string dmode = "residues";
  std::vector<int> dsigns;
  auto* c_density = app.add_subcommand("density", "density of primes with prescribed symbols on a set");
  c_density->add_option("S", dset, "positive integers")->required();
  c_density->add_option("--mode", dmode)->check(CLI::IsMember({"residues", "nonresidues", "pattern"}));
  c_density->add_option("--signs", dsigns, "+1/-1 per element for --mode pattern")->delimiter(',');
  c_density->callback([&] { action = [&] { return run_density(dset, dmode, dsigns); }; });

  std::vector<i64> fds;
  bool freduced = false;
  auto* c_forms = app.add_subcommand("forms", "class numbers and the class-number formula");
  c_forms->add_option("d", fds, "fundamental discriminants")->required();
  c_forms->add_flag("--reduced", freduced, "list reduced forms (d < 0)");
  c_forms->callback([&] { action = [&] { return run_forms(fds, freduced); }; });

  std::vector<i64> eps_primes;
  std::vector<i64> sweep;
  auto* c_excess = app.add_subcommand("excess", "quadratic excess on subintervals of (0, p)");
  auto* ep = c_excess->add_option("p", eps_primes, "primes > 3");
  c_excess->add_option("--sweep", sweep, "lo hi: summary over every prime in range")->expected(2)->excludes(ep);
  c_excess->callback([&] {
    if (eps_primes.empty() && sweep.empty()) throw CLI::ValidationError("excess", "give primes or --sweep lo hi");
    action = [&] { return run_excess(eps_primes, sweep.empty() ? 0 : sweep[0], sweep.empty() ? 0 : sweep[1]); };
  });

  i64 gn = 0, gp = 0;
  auto* c_gauss = app.add_subcommand("gauss-sum", "sum_x chi_p(x) exp(2 pi i n x / p)");
  c_gauss->add_option("n", gn)->required();
  c_gauss->add_option("p", gp)->required();
  c_gauss->callback([&] { action = [&] { return run_gauss(gn, gp); }; });

  i64 wp = 0, wN = -1;
  std::vector<i64> wroots, wcoeffs;
  auto* c_weil = app.add_subcommand("weil", "character sums of split polynomials");
  c_weil->add_option("--p", wp)->required();
  c_weil->add_option("--roots", wroots)->delimiter(',');
  c_weil->add_option("--coeffs", wcoeffs, "monic, constant term first")->delimiter(',');
  c_weil->add_option("--N", wN, "also report sum_{x<=N}");
  c_weil->callback([&] { action = [&] { return run_weil(wp, wroots, wcoeffs, wN); }; });

  auto* c_ap = app.add_subcommand("ap", "residues and non-residues along arithmetic progressions");
  c_ap->require_subcommand(1);
  std::vector<i64> pb;
  int ps = 2, psupport = 1;
  i64 pp = 0;
  std::vector<int> peps{1};
  auto* c_pat = c_ap->add_subcommand("pattern", "count n with prescribed symbols on unions n + i b_j");
  c_pat->add_option("--b", pb)->required()->delimiter(',');
  c_pat->add_option("--s", ps)->required();
  c_pat->add_option("--p", pp)->required();
  c_pat->add_option("--eps", peps, "one sign, or one per offset")->delimiter(',');
  c_pat->add_option("--support-sign", psupport);
  c_pat->callback([&] { action = [&] { return run_ap_pattern(pb, ps, pp, peps, psupport); }; });

  std::vector<i64> fa, fb, fprimes;
  int fs = 2;
  std::string fspec;
  auto* c_fam = c_ap->add_subcommand("family", "q_eps(p) for the family (a_i + b_i n + b_i [0, s))");
  c_fam->add_option("--a", fa)->delimiter(',');
  c_fam->add_option("--b", fb)->delimiter(',');
  c_fam->add_option("--s", fs);
  c_fam->add_option("--spec", fspec, "JSON file with {B, S} or {a, b, s}");
  c_fam->add_option("--p", fprimes, "primes to count at")->required()->delimiter(',');
  c_fam->callback([&] {
    action = [&] {
      APFamilySpec spec;
      if (!fspec.empty()) spec = spec_from_file(fspec, fs);
      else if (!fa.empty()) spec = family_from_tuple(fa, fb, fs);
      else throw UsageError("give --a/--b/--s or --spec");
      return run_ap_family(spec, fprimes);
    };
  });

  std::vector<i64> td, tt;
  i64 ta1 = 1, tb1 = 1;
  int ts = 2;
  bool tdensity = false;
  auto* c_tup = c_ap->add_subcommand("tuple", "generated tuple, quotient diagram and plus-class density");
  c_tup->add_option("--d", td)->required()->delimiter(',');
  c_tup->add_option("--t", tt)->required()->delimiter(',');
  c_tup->add_option("--a1", ta1);
  c_tup->add_option("--b1", tb1);
  c_tup->add_option("--s", ts)->required();
  c_tup->add_flag("--density", tdensity, "scan primes up to --prime-bound (default 1e5)");
  c_tup->callback([&] { action = [&] { return run_ap_tuple(td, tt, ta1, tb1, ts, tdensity); }; });

  i64 cp = 0, ch = 0;
  int cr = 4;
  double cstep = 0.25;
  auto* c_clt = app.add_subcommand("clt", "distribution of windowed character sums S_h");
  c_clt->add_option("p", cp)->required();
  c_clt->add_option("--window", ch, "window h (default floor(log^2 p))");
  c_clt->add_option("--moments", cr)->check(CLI::Range(1, 8));
  c_clt->add_option("--step", cstep, "CDF grid step on [-3, 3]")->check(CLI::PositiveNumber);
  c_clt->callback([&] { action = [&] { return run_clt(cp, ch, cr, cstep); }; });

  ZkpArgs za;
  auto* c_zkp = app.add_subcommand("zkp", "square-root identification protocol");
  c_zkp->require_subcommand(1);
  auto zkp_common = [&](CLI::App* c) {
    c->add_option("--bits", za.bits, "prime size for keygen")->check(CLI::Range(16, 1024));
    c->add_option("--id", za.id, "identification number I");
    c->add_option("--p", za.p);
    c->add_option("--q", za.q);
  };
  auto* c_demo = c_zkp->add_subcommand("demo", "honest session, JSON-lines transcript");
  zkp_common(c_demo);
  c_demo->add_option("--rounds", za.rounds)->check(CLI::Range(1, 1000));
  c_demo->callback([&] { raw_action = [&] { return run_zkp_demo(za); }; });
  auto* c_keygen = c_zkp->add_subcommand("keygen", "keys from --seed or from --p --q");
  zkp_common(c_keygen);
  c_keygen->callback([&] { action = [&] { return run_zkp_keygen(za); }; });
  auto* c_imp = c_zkp->add_subcommand("impostor", "acceptance rate of a prover without the secret");
  zkp_common(c_imp);
  c_imp->add_option("--rounds", za.rounds)->check(CLI::Range(1, 62));
  c_imp->add_option("--trials", za.trials);
  c_imp->callback([&] { action = [&] { return run_zkp_impostor(za); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (raw_action) return raw_action();
    emit(action(), G.csv);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
