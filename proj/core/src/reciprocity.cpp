#include "quadrex/reciprocity.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

constexpr std::size_t kMaxOddSupport = 20;

std::vector<i64> units_mod(i64 m) {
  std::vector<i64> out;
  for (i64 r = 1; r < m; ++r)
    if (gcd(r, m) == 1) out.push_back(r);
  return out;
}

ResidueClassSet complement(const ResidueClassSet& s) {
  ResidueClassSet c;
  c.modulus = s.modulus;
  c.excluded_primes = s.excluded_primes;
  for (i64 r : units_mod(s.modulus))
    if (!std::binary_search(s.classes.begin(), s.classes.end(), r)) c.classes.push_back(r);
  return c;
}

}  // namespace

bool ResidueClassSet::contains(i64 p) const {
  if (p < 3 || p % 2 == 0) return false;
  if (std::find(excluded_primes.begin(), excluded_primes.end(), p) != excluded_primes.end()) return false;
  return std::binary_search(classes.begin(), classes.end(), mod(p, modulus));
}

std::string ResidueClassSet::to_json() const {
  // integers as decimal strings, matching the command-line output
  auto strings = [](const std::vector<i64>& v) {
    std::vector<std::string> out;
    for (i64 x : v) out.push_back(std::to_string(x));
    return out;
  };
  nlohmann::ordered_json j;
  j["modulus"] = std::to_string(modulus);
  j["classes"] = strings(classes);
  j["excluded_primes"] = strings(excluded_primes);
  return j.dump();
}

ClassSetPair fundamental_problem(i64 q) {
  ClassSetPair out;
  if (q == -1) {
    out.plus = {4, {1}, {}};
    out.minus = {4, {3}, {}};
    return out;
  }
  if (q == 2) {
    out.plus = {8, {1, 7}, {}};
    out.minus = {8, {3, 5}, {}};
    return out;
  }
  if (q < 3 || q % 2 == 0 || !is_prime(static_cast<u64>(q)))
    throw Error(Errc::InvalidArgument, "q must be -1, 2 or an odd prime");
  ResidueTable t = residue_table(q);
  ResidueClassSet res{q, t.residues, {}};
  ResidueClassSet non = complement(res);
  if (q % 4 == 1) {
    out.plus = res;
    out.minus = non;
    return out;
  }
  // q == 3 mod 4: chi_p(q) = chi_q(p) when p == 1 mod 4, -chi_q(p) when p == 3 mod 4
  out.plus.modulus = out.minus.modulus = 4 * q;
  for (i64 r : res.classes) {
    out.plus.classes.push_back(crt(std::vector<Congruence>{{1, 4}, {r, q}}).residue);
    out.minus.classes.push_back(crt(std::vector<Congruence>{{3, 4}, {r, q}}).residue);
  }
  for (i64 r : non.classes) {
    out.plus.classes.push_back(crt(std::vector<Congruence>{{3, 4}, {r, q}}).residue);
    out.minus.classes.push_back(crt(std::vector<Congruence>{{1, 4}, {r, q}}).residue);
  }
  std::sort(out.plus.classes.begin(), out.plus.classes.end());
  std::sort(out.minus.classes.begin(), out.minus.classes.end());
  return out;
}

i64 class_modulus(i64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be nonzero");
  SquarefreeSplit s = squarefree_split(d);
  i64 m = 1;
  bool four = d < 0;
  for (i64 p : s.pi_odd) {
    m *= p;
    if (p == 2 || p % 4 == 3) four = true;
  }
  return four ? 4 * m : m;
}

ClassSetPair basic_problem(i64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be nonzero");
  SquarefreeSplit split = squarefree_split(d);
  if (d > 0 && split.sigma == 1) {
    std::vector<i64> primes;
    for (auto [p, e] : factorize(d).factors) primes.push_back(p);
    return {{1, {0}, primes}, {1, {}, primes}};
  }
  if (split.pi_odd.size() > kMaxOddSupport)
    throw Error(Errc::BudgetExceeded, "more than 20 primes of odd multiplicity");

  std::vector<i64> gens(split.pi_odd.begin(), split.pi_odd.end());
  if (d < 0) gens.insert(gens.begin(), -1);
  std::vector<ClassSetPair> parts;
  for (i64 g : gens) parts.push_back(fundamental_problem(g));

  const i64 m = class_modulus(d);
  std::vector<i64> v;
  const std::size_t k = gens.size();
  // mask bit i set: chi_p(gens[i]) = -1; an even number of -1 factors gives chi_p(d) = 1
  for (u64 mask = 0; mask < (u64{1} << k); ++mask) {
    if (__builtin_popcountll(mask) % 2) continue;
    std::vector<Congruence> partial = {{0, 1}};
    for (std::size_t i = 0; i < k && !partial.empty(); ++i) {
      const ResidueClassSet& sel = (mask >> i & 1) ? parts[i].minus : parts[i].plus;
      std::vector<Congruence> next;
      for (const auto& c : partial)
        for (i64 r : sel.classes) {
          try {
            next.push_back(successive_substitution({c, {r, sel.modulus}}));
          } catch (const IncompatibleError&) {
          }
        }
      partial.swap(next);
    }
    for (const auto& c : partial) {
      if (c.modulus != m) throw Error(Errc::InvalidArgument, "class modulus mismatch");
      v.push_back(c.residue);
    }
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());

  ClassSetPair out;
  out.plus = {m, v, split.pi_even};
  out.minus = complement(out.plus);
  return out;
}

VerifyReport verify_class_set(const ResidueClassSet& set, i64 d, i64 bound, int sign) {
  VerifyReport rep;
  for (i64 p : primes_up_to(bound)) {
    if (p == 2 || d % p == 0) continue;
    ++rep.primes_checked;
    bool want = legendre_fast(mod(d, p), p) == sign;
    if (set.contains(p) != want) rep.counterexamples.push_back(p);
  }
  return rep;
}

}  // namespace quadrex
