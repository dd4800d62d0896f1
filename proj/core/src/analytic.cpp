#include "quadrex/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrex/errors.hpp"
#include "quadrex/forms.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
i64 ceil_of(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

// prefix[k] = sum_{n=1}^{k} chi_p(n), k in [0, p]
std::vector<i64> excess_prefix(i64 p) {
  auto chi = legendre_table(p);
  std::vector<i64> pre(static_cast<std::size_t>(p) + 1, 0);
  for (i64 n = 1; n <= p; ++n) pre[static_cast<std::size_t>(n)] = pre[static_cast<std::size_t>(n - 1)] + chi[static_cast<std::size_t>(n % p)];
  return pre;
}

i64 excess_from_prefix(const std::vector<i64>& pre, i64 p, Rational lo, Rational hi) {
  if (lo < 0 || hi > p || !(lo < hi)) throw Error(Errc::InvalidArgument, "interval must satisfy 0 <= lo < hi <= p");
  i64 first = floor_of(lo) + 1, last = ceil_of(hi) - 1;
  if (last < first) return 0;
  return pre[static_cast<std::size_t>(last)] - pre[static_cast<std::size_t>(first - 1)];
}

std::string interval_name(i64 lo_num, i64 lo_den, i64 hi_num, i64 hi_den) {
  auto part = [](i64 num, i64 den) -> std::string {
    if (num == 0) return "0";
    std::string s = num == 1 ? "p" : std::to_string(num) + "p";
    return den == 1 ? s : s + "/" + std::to_string(den);
  };
  return "(" + part(lo_num, lo_den) + ", " + part(hi_num, hi_den) + ")";
}

constexpr double kPi = std::numbers::pi;

}  // namespace

PeriodicCharacter legendre_character(i64 p) {
  PeriodicCharacter c;
  c.modulus = p;
  c.values = legendre_table(p);
  return c;
}

PeriodicCharacter chi4_character() { return {4, {0, 1, 0, -1}}; }

PeriodicCharacter pointwise_product(const PeriodicCharacter& a, const PeriodicCharacter& b) {
  PeriodicCharacter c;
  c.modulus = lcm(a.modulus, b.modulus);
  c.values.resize(static_cast<std::size_t>(c.modulus));
  for (i64 n = 0; n < c.modulus; ++n) c.values[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(a(n) * b(n));
  return c;
}

int basic_character(i64 primary, i64 n) {
  if (primary == -4) {
    i64 r = mod(n, 4);
    return r == 1 ? 1 : r == 3 ? -1 : 0;
  }
  if (primary == 8 || primary == -8) {
    i64 r = mod(n, 8);
    if (r % 2 == 0) return 0;
    if (primary == 8) return (r == 1 || r == 7) ? 1 : -1;
    return (r == 1 || r == 3) ? 1 : -1;
  }
  i64 p = primary < 0 ? -primary : primary;
  if (p < 3 || !is_prime(static_cast<u64>(p)) || (p % 4 == 1) != (primary > 0))
    throw Error(Errc::InvalidArgument, std::to_string(primary) + " is not a primary discriminant");
  return legendre_fast(mod(n, p), p);
}

std::vector<i64> primary_factors(i64 d) {
  if (!is_fundamental(d)) throw Error(Errc::InvalidArgument, std::to_string(d) + " is not a fundamental discriminant");
  std::vector<i64> out;
  i64 odd_part = 1;
  for (auto [p, e] : factorize(d).factors) {
    if (p == 2) continue;
    i64 star = p % 4 == 1 ? p : -p;
    out.push_back(star);
    odd_part *= star;
  }
  i64 rest = d / odd_part;
  if (rest != 1) out.insert(out.begin(), rest);
  return out;
}

RealPrimitiveCharacter real_character(i64 d) {
  RealPrimitiveCharacter c;
  c.d = d;
  c.modulus = d < 0 ? -d : d;
  c.primary_factors = primary_factors(d);
  return c;
}

int RealPrimitiveCharacter::operator()(i64 n) const {
  int v = 1;
  for (i64 f : primary_factors) {
    v *= basic_character(f, n);
    if (v == 0) return 0;
  }
  return v;
}

PeriodicCharacter RealPrimitiveCharacter::table() const {
  PeriodicCharacter c;
  c.modulus = modulus;
  c.values.assign(static_cast<std::size_t>(modulus), 0);
  for (i64 n = 0; n < modulus; ++n) c.values[static_cast<std::size_t>(n)] = static_cast<std::int8_t>((*this)(n));
  return c;
}

LSeriesEstimate L1_truncated(const PeriodicCharacter& chi, u64 terms) {
  if (terms < static_cast<u64>(chi.modulus)) throw Error(Errc::InvalidArgument, "need at least one full period of terms");
  long double acc = 0;
  std::size_t idx = 1 % static_cast<std::size_t>(chi.modulus);
  for (u64 n = 1; n <= terms; ++n) {
    int v = chi.values[idx];
    if (v) acc += static_cast<long double>(v) / static_cast<long double>(n);
    if (++idx == static_cast<std::size_t>(chi.modulus)) idx = 0;
  }
  LSeriesEstimate e;
  e.value = static_cast<double>(acc);
  e.terms = terms;
  // interval sums of a non-principal character are at most modulus - 1 in size
  e.tail_bound = static_cast<double>(chi.modulus - 1) / static_cast<double>(terms) + 1e-12;
  return e;
}

LSeriesEstimate L1_truncated(const RealPrimitiveCharacter& chi, u64 terms) { return L1_truncated(chi.table(), terms); }

std::complex<double> gauss_sum(i64 n, i64 p) {
  if (p > 10000) throw Error(Errc::BudgetExceeded, "float Gauss sums are capped at p <= 10^4");
  auto chi = legendre_table(p);
  long double re = 0, im = 0;
  i64 nm = mod(n, p);
  for (i64 j = 1; j < p; ++j) {
    i64 k = mul_mod(nm, j, p);
    long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(p);
    re += chi[static_cast<std::size_t>(j)] * std::cos(ang);
    im += chi[static_cast<std::size_t>(j)] * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

i64 quadratic_excess(i64 p, Rational lo, Rational hi) { return excess_from_prefix(excess_prefix(p), p, lo, hi); }

bool SignReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SignCheck& c) { return c.ok; });
}

SignReport excess_sign_report(i64 p) {
  if (p <= 3) throw Error(Errc::InvalidArgument, "sign report needs p > 3");
  auto pre = excess_prefix(p);
  SignReport rep;
  rep.p = p;
  auto add = [&](i64 ln, i64 ld, i64 hn, i64 hd, int sign) {
    SignCheck c;
    c.interval = interval_name(ln, ld, hn, hd);
    c.excess = excess_from_prefix(pre, p, Rational(ln * p, ld), Rational(hn * p, hd));
    c.expected_sign = sign;
    c.ok = (c.excess > 0 ? 1 : c.excess < 0 ? -1 : 0) == sign;
    rep.checks.push_back(c);
  };
  if (p % 4 == 3) {
    add(0, 1, 1, 2, 1);
    add(1, 2, 1, 1, -1);
    add(0, 1, 1, 3, 1);
    add(1, 3, 2, 3, 0);
    add(2, 3, 1, 1, -1);
  } else {
    add(0, 1, 1, 4, 1);
    add(1, 4, 1, 2, -1);
    add(1, 2, 3, 4, -1);
    add(3, 4, 1, 1, 1);
    add(0, 1, 1, 3, 1);
    add(1, 3, 2, 3, -1);
    add(2, 3, 1, 1, 1);
  }
  return rep;
}

std::vector<ExcessFormulaCheck> excess_vs_lseries(i64 p, u64 terms) {
  if (p <= 3 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, "needs a prime p > 3");
  auto pre = excess_prefix(p);
  PeriodicCharacter chip = legendre_character(p);
  std::vector<ExcessFormulaCheck> out;
  const double sp = std::sqrt(static_cast<double>(p));
  auto check = [&](const char* name, Rational hi, double coeff, const PeriodicCharacter& chi) {
    ExcessFormulaCheck c;
    c.interval = name;
    c.excess = excess_from_prefix(pre, p, Rational(0), hi);
    LSeriesEstimate L = L1_truncated(chi, std::max<u64>(terms, static_cast<u64>(chi.modulus)));
    c.formula = coeff * L.value;
    c.bound = coeff * L.tail_bound + 1e-9;
    c.ok = std::fabs(static_cast<double>(c.excess) - c.formula) <= c.bound;
    out.push_back(c);
  };
  if (p % 4 == 3) {
    check("(0, p/2)", Rational(p, 2), sp / kPi * (2 - legendre_fast(2, p)), chip);
    check("(0, p/3)", Rational(p, 3), sp / (2 * kPi) * (3 - legendre_fast(3, p)), chip);
  } else {
    check("(0, p/4)", Rational(p, 4), sp / kPi, pointwise_product(chi4_character(), chip));
    check("(0, p/3)", Rational(p, 3), std::sqrt(3.0 * static_cast<double>(p)) / (2 * kPi),
          pointwise_product(legendre_character(3), chip));
  }
  return out;
}

std::vector<ClassNumberIdentity> excess_class_number_identities(i64 p) {
  if (p <= 3 || !is_prime(static_cast<u64>(p))) throw Error(Errc::InvalidArgument, "needs a prime p > 3");
  auto pre = excess_prefix(p);
  std::vector<ClassNumberIdentity> out;
  auto add = [&](const char* rel, Rational hi, i64 disc, i64 num, i64 den) {
    ClassNumberIdentity c;
    c.relation = rel;
    c.excess = excess_from_prefix(pre, p, Rational(0), hi);
    c.discriminant = disc;
    c.class_number = static_cast<i64>(reduced_forms(disc).size());
    c.ok = c.excess * den == num * c.class_number;
    c.expected_excess = num * c.class_number / den;
    out.push_back(c);
  };
  if (p % 8 == 3) add("q(0,p/2) = 3h(-p)", Rational(p, 2), -p, 3, 1);
  if (p % 8 == 7) add("q(0,p/2) = h(-p)", Rational(p, 2), -p, 1, 1);
  if (p % 4 == 1) {
    add("q(0,p/4) = h(-4p)/2", Rational(p, 4), -4 * p, 1, 2);
    add("q(0,p/3) = h(-3p)/2", Rational(p, 3), -3 * p, 1, 2);
  }
  if (p % 12 == 7) add("q(0,p/3) = 2h(-p)", Rational(p, 3), -p, 2, 1);
  if (p % 12 == 11) add("q(0,p/3) = h(-p)", Rational(p, 3), -p, 1, 1);
  return out;
}

}  // namespace quadrex
