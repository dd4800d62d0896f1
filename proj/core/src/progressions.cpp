#include "quadrex/progressions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "quadrex/density.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

constexpr int kMaxIndices = 20;

void require_odd_prime(i64 p) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, "p must be an odd prime");
}

void require_distinct_positive(const std::vector<i64>& b) {
  if (b.empty()) throw Error(Errc::InvalidArgument, "need at least one difference");
  std::vector<i64> sorted = b;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw Error(Errc::InvalidArgument, "differences must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::InvalidArgument, "differences must be distinct");
}

// Adds every nonempty even-size subset of K to out.
void add_even_subsets(IndexMask K, std::set<IndexMask>& out) {
  for (IndexMask sub = K; sub; sub = (sub - 1) & K)
    if (__builtin_popcount(sub) % 2 == 0) out.insert(sub);
}

IndexMask mask_of(const std::vector<int>& rows) {
  IndexMask m = 0;
  for (int r : rows) m |= IndexMask{1} << r;
  return m;
}

i64 checked_mul(i64 x, i64 y) {
  i64 r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(Errc::BudgetExceeded, "tuple entry overflows 64 bits");
  return r;
}

i64 checked_add(i64 x, i64 y) {
  i64 r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(Errc::BudgetExceeded, "tuple entry overflows 64 bits");
  return r;
}

}  // namespace

std::vector<i64> progression_offsets(const std::vector<i64>& b, int s) {
  require_distinct_positive(b);
  if (s < 1) throw Error(Errc::InvalidArgument, "s must be positive");
  std::vector<i64> w;
  for (i64 bj : b)
    for (int i = 0; i < s; ++i) w.push_back(checked_mul(bj, i));
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

PatternCounts count_patterns_ap_b(const std::vector<i64>& b, int s, i64 p, const std::vector<int>& eps,
                                  int support_sign) {
  require_odd_prime(p);
  PatternCounts out;
  out.offsets = progression_offsets(b, s);
  out.gamma = static_cast<int>(out.offsets.size());
  const i64 span = out.offsets.back();
  out.support_exponent = static_cast<int>(1 + span);
  if (static_cast<int>(eps.size()) != out.gamma) throw Error(Errc::InvalidArgument, "need one sign per offset");
  if (support_sign != 1 && support_sign != -1) throw Error(Errc::InvalidArgument, "support sign must be +1 or -1");

  auto chi = legendre_table(p);
  // inside[w] == 1 when w is an offset
  std::vector<char> inside(static_cast<std::size_t>(span) + 1, 0);
  for (i64 w : out.offsets) inside[static_cast<std::size_t>(w)] = 1;
  for (i64 n = 1; n + span <= p - 1; ++n) {
    bool match = true;
    for (std::size_t i = 0; i < out.offsets.size() && match; ++i)
      match = chi[static_cast<std::size_t>(n + out.offsets[i])] == eps[i];
    if (match) ++out.c_eps;
    bool support = true;
    for (i64 w = 0; w <= span && support; ++w)
      support = (chi[static_cast<std::size_t>(n + w)] == support_sign) == static_cast<bool>(inside[static_cast<std::size_t>(w)]);
    if (support) ++out.c_sigma;
  }
  return out;
}

APFamilySpec family_from_tuple(const std::vector<i64>& a, const std::vector<i64>& b, int s) {
  if (a.size() != b.size() || a.empty()) throw Error(Errc::InvalidArgument, "a and b must have the same nonzero length");
  if (s < 1) throw Error(Errc::InvalidArgument, "s must be positive");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 1) throw Error(Errc::InvalidArgument, "need a_i >= 0 and b_i >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (a[i] == a[j] && b[i] == b[j]) throw Error(Errc::InvalidArgument, "pairs (a_i, b_i) must be distinct");
  }
  APFamilySpec spec;
  std::map<i64, std::size_t> slot;  // first-appearance order of the distinct b's
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(b[i], spec.B.size());
    if (fresh) {
      spec.B.push_back(b[i]);
      spec.S.emplace_back();
    }
    auto& S = spec.S[it->second];
    for (int j = 0; j < s; ++j) S.push_back(checked_add(a[i], checked_mul(b[i], j)));
  }
  for (auto& S : spec.S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
  }
  return spec;
}

APParameters compute_parameters(const APFamilySpec& spec) {
  const std::size_t k = spec.B.size();
  if (k == 0 || spec.S.size() != k) throw Error(Errc::InvalidArgument, "B and S must have the same nonzero length");
  if (k > kMaxIndices) throw Error(Errc::BudgetExceeded, "at most 20 differences are supported");
  require_distinct_positive(spec.B);

  APParameters out;
  out.k = static_cast<int>(k);
  out.b_max = *std::max_element(spec.B.begin(), spec.B.end());
  std::map<Rational, IndexMask> where;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& S = spec.S[i];
    if (S.empty()) throw Error(Errc::InvalidArgument, "every S_i must be nonempty");
    std::set<i64> seen;
    for (i64 z : S) {
      if (z < 0 || !seen.insert(z).second) throw Error(Errc::InvalidArgument, "S_i must hold distinct nonnegative integers");
      where[Rational(z, spec.B[i])] |= IndexMask{1} << i;
    }
    out.alpha += static_cast<i64>(S.size());
  }
  out.union_size = static_cast<i64>(where.size());

  std::map<IndexMask, std::vector<Rational>> T;
  for (const auto& [t, K] : where) T[K].push_back(t);
  std::set<IndexMask> lambda;
  for (const auto& [K, ts] : T) {
    out.K_max.push_back(K);
    out.T.push_back(ts);
    out.e += static_cast<i64>(ts.size()) * (__builtin_popcount(K) - 1);
    add_even_subsets(K, lambda);
  }
  out.Lambda.assign(lambda.begin(), lambda.end());
  if (out.alpha - out.e != out.union_size) throw Error(Errc::ConditionViolated, "alpha - e differs from the union size");

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (spec.B[i] <= spec.B[j]) continue;
      const i64 db = spec.B[i] - spec.B[j];
      for (i64 x : spec.S[i])
        for (i64 y : spec.S[j])
          if (y > x && (y - x) % db == 0) out.cutoff = std::max(out.cutoff, (y - x) / db + 1);
    }
  return out;
}

const char* prime_class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::Plus: return "plus";
    case PrimeClass::Minus: return "minus";
    case PrimeClass::NotAllowable: return "not-allowable";
  }
  return "?";
}

std::vector<int> signature(i64 p, const APFamilySpec& spec, const APParameters& params) {
  require_odd_prime(p);
  IndexMask negative = 0;
  for (std::size_t i = 0; i < spec.B.size(); ++i) {
    int c = legendre_fast(mod(spec.B[i], p), p);
    if (c == 0) return {};
    if (c < 0) negative |= IndexMask{1} << i;
  }
  std::vector<int> sig;
  sig.reserve(params.Lambda.size());
  for (IndexMask I : params.Lambda) sig.push_back(__builtin_popcount(I & negative) % 2 ? -1 : 1);
  return sig;
}

PrimeClass classify(i64 p, const APFamilySpec& spec, const APParameters& params) {
  for (i64 b : spec.B)
    if (b % p == 0) return PrimeClass::NotAllowable;
  auto sig = signature(p, spec, params);
  return std::all_of(sig.begin(), sig.end(), [](int v) { return v == 1; }) ? PrimeClass::Plus : PrimeClass::Minus;
}

i64 window_count(i64 p, const APFamilySpec& spec) {
  i64 r = -1;
  for (std::size_t i = 0; i < spec.B.size(); ++i) {
    i64 top = *std::max_element(spec.S[i].begin(), spec.S[i].end());
    i64 ri = p - 1 - top < 0 ? -1 : (p - 1 - top) / spec.B[i];
    r = (r < 0) ? ri : std::min(r, ri);
    if (ri < 0) return 0;
  }
  return std::max<i64>(r, 0);
}

i64 count_q_epsilon(i64 p, const APFamilySpec& spec, int eps) {
  require_odd_prime(p);
  if (eps != 1 && eps != -1) throw Error(Errc::InvalidArgument, "eps must be +1 or -1");
  const i64 r = window_count(p, spec);
  if (r == 0) return 0;
  auto chi = legendre_table(p);
  i64 count = 0;
  for (i64 n = 1; n <= r; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < spec.B.size() && ok; ++i) {
      const i64 base = spec.B[i] * n;
      for (i64 z : spec.S[i])
        if (chi[static_cast<std::size_t>(base + z)] != eps) {
          ok = false;
          break;
        }
    }
    if (ok) ++count;
  }
  return count;
}

bool is_admissible(const StandardTuple& t) {
  const std::size_t k = t.a.size();
  if (k < 2 || t.b.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.a[i] < 0 || t.b[i] < 1) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (t.b[i] == t.b[j]) return false;
      if (static_cast<i128>(t.a[i]) * t.b[j] == static_cast<i128>(t.a[j]) * t.b[i]) return false;
    }
  }
  return true;
}

QuotientDiagram quotient_diagram(const StandardTuple& t, int s) {
  if (!is_admissible(t)) throw Error(Errc::NotAdmissible, "tuple is not admissible");
  if (s < 1) throw Error(Errc::InvalidArgument, "s must be positive");
  const std::size_t k = t.a.size();
  if (k > kMaxIndices) throw Error(Errc::BudgetExceeded, "at most 20 coordinates are supported");

  QuotientDiagram out;
  out.s = s;
  out.alpha = static_cast<i64>(k) * s;
  std::map<Rational, std::vector<int>> classes;  // keyed by fractional part
  for (std::size_t i = 0; i < k; ++i) {
    Rational q(t.a[i], t.b[i]);
    out.quotients.push_back(q);
    Rational frac = q - Rational(q.numerator() / q.denominator());
    classes[frac].push_back(static_cast<int>(i));
  }

  std::set<IndexMask> lambda;
  for (auto& [frac, members] : classes) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), [&](int x, int y) { return out.quotients[x] < out.quotients[y]; });
    std::vector<i64> gaps;
    for (std::size_t j = 0; j + 1 < members.size(); ++j) {
      Rational g = out.quotients[members[j + 1]] - out.quotients[members[j]];
      gaps.push_back(g.numerator());
      if (gaps.back() <= s - 1) out.e += s - gaps.back();
    }
    out.class_gaps.push_back(gaps);

    // maximal runs of gaps <= s - 1 form the blocks
    std::size_t j = 0;
    while (j < gaps.size()) {
      if (gaps[j] > s - 1) {
        ++j;
        continue;
      }
      OverlapBlock blk;
      blk.rows.push_back(members[j]);
      while (j < gaps.size() && gaps[j] <= s - 1) {
        blk.gaps.push_back(gaps[j]);
        blk.rows.push_back(members[j + 1]);
        ++j;
      }
      std::vector<i64> start{0};
      for (i64 g : blk.gaps) start.push_back(start.back() + g);
      for (i64 x = 0; x <= start.back() + s - 1; ++x) {
        std::vector<int> col;
        for (std::size_t r = 0; r < blk.rows.size(); ++r)
          if (start[r] <= x && x <= start[r] + s - 1) col.push_back(blk.rows[r]);
        if (col.size() >= 2) add_even_subsets(mask_of(col), lambda);
        blk.columns.push_back(std::move(col));
      }
      out.blocks.push_back(std::move(blk));
    }
  }
  out.Lambda.assign(lambda.begin(), lambda.end());
  return out;
}

StandardTuple generate_tuple(const std::vector<i64>& d, const std::vector<i64>& t, i64 a1, i64 b1) {
  if (d.size() != t.size()) throw Error(Errc::InvalidArgument, "need one multiplier per gap");
  if (a1 < 0 || b1 < 1) throw Error(Errc::InvalidArgument, "need a_1 >= 0 and b_1 >= 1");
  StandardTuple out{{a1}, {b1}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || t[i] < 2) throw Error(Errc::InvalidArgument, "need gaps >= 1 and multipliers >= 2");
    out.a.push_back(checked_mul(t[i], checked_add(out.a[i], checked_mul(d[i], out.b[i]))));
    out.b.push_back(checked_mul(t[i], out.b[i]));
  }
  for (std::size_t i = 1; i < out.a.size(); ++i) {
    Rational gap(0);
    for (std::size_t j = i; j-- > 0;) {
      gap += d[j];
      if (Rational(out.a[i], out.b[i]) - Rational(out.a[j], out.b[j]) != gap)
        throw Error(Errc::ConditionViolated, "quotient differences do not match the gap sums");
    }
  }
  return out;
}

void require_independent_squarefree_parts(const StandardTuple& t) {
  std::vector<i64> sigma, nonunit;
  for (i64 b : t.b) {
    sigma.push_back(squarefree_split(b).sigma);
    if (sigma.back() != 1) nonunit.push_back(sigma.back());
  }
  std::vector<i64> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::ConditionViolated, "square-free parts of the b_i must be distinct");
  if (!nonunit.empty() && gf2_rank(incidence_matrix(nonunit).matrix) != nonunit.size())
    throw Error(Errc::ConditionViolated, "a product of square-free parts is a square");
}

PlusDensity pi_plus_density(const StandardTuple& t, int s, i64 prime_bound) {
  if (!is_admissible(t)) throw Error(Errc::NotAdmissible, "tuple is not admissible");
  require_independent_squarefree_parts(t);
  QuotientDiagram qd = quotient_diagram(t, s);

  PlusDensity out;
  out.prime_bound = prime_bound;
  out.blocks = static_cast<int>(qd.blocks.size());
  for (const auto& blk : qd.blocks) out.block_rows += static_cast<int>(blk.rows.size());
  out.independent_model = std::ldexp(1.0, out.blocks - out.block_rows);
  out.theoretical = out.independent_model;

  int unit_row = -1;
  for (std::size_t i = 0; i < t.b.size(); ++i)
    if (squarefree_split(t.b[i]).sigma == 1) unit_row = static_cast<int>(i);
  if (unit_row >= 0) {
    for (const auto& blk : qd.blocks) {
      if (std::find(blk.rows.begin(), blk.rows.end(), unit_row) == blk.rows.end()) continue;
      std::set<IndexMask> block_lambda;
      for (const auto& col : blk.columns)
        if (col.size() >= 2) add_even_subsets(mask_of(col), block_lambda);
      std::size_t with_unit = 0;
      for (IndexMask I : block_lambda)
        if (I >> unit_row & 1) ++with_unit;
      if (with_unit != 0 && with_unit != block_lambda.size()) {
        out.formula = PlusDensityCase::UnitBlockSplit;
        out.theoretical = std::ldexp(std::ldexp(1.0, out.blocks) - 1.0, 1 - out.block_rows);
      }
    }
  }

  for (i64 p : primes_up_to(prime_bound)) {
    if (p == 2) continue;
    IndexMask negative = 0;
    bool allowable = true;
    for (std::size_t i = 0; i < t.b.size() && allowable; ++i) {
      int c = legendre_fast(mod(t.b[i], p), p);
      if (c == 0) allowable = false;
      if (c < 0) negative |= IndexMask{1} << i;
    }
    if (!allowable) continue;
    ++out.allowable;
    bool plus = std::all_of(qd.Lambda.begin(), qd.Lambda.end(),
                            [&](IndexMask I) { return __builtin_popcount(I & negative) % 2 == 0; });
    if (plus) ++out.plus;
  }
  return out;
}

}  // namespace quadrex
