#include "quadrex/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quadrex/analytic.hpp"
#include "quadrex/errors.hpp"

namespace quadrex {

namespace {

bool squarefree(i64 n) { return squarefree_split(n).square == 1; }

void require_fundamental(i64 d) {
  if (!is_fundamental(d)) throw Error(Errc::InvalidArgument, std::to_string(d) + " is not a fundamental discriminant");
}

}  // namespace

bool is_fundamental(i64 d) {
  if (d == 0 || d == 1) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  i64 n = d / 4;
  i64 r = mod(n, 4);
  return (r == 2 || r == 3) && squarefree(n);
}

std::vector<QForm> reduced_forms(i64 d) {
  if (d >= 0 || (mod(d, 4) != 0 && mod(d, 4) != 1))
    throw Error(Errc::InvalidArgument, "need a negative discriminant congruent to 0 or 1 mod 4");
  const i64 D = -d;
  std::vector<QForm> out;
  // |b| <= a <= c forces 3b^2 <= |d|
  for (i64 b = D % 2; 3 * b * b <= D; b += 2) {
    i64 num = b * b + D;  // = 4ac
    for (i64 a = std::max<i64>(b, 1); a * a <= num / 4; ++a) {
      if (num % (4 * a)) continue;
      i64 c = num / (4 * a);
      if (c < a) break;
      if (QForm f{a, b, c}; f.primitive()) {
        out.push_back(f);
        if (b != 0 && b != a && a != c) out.push_back({a, -b, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int automorph_count(i64 d) {
  if (d >= 0) throw Error(Errc::InvalidArgument, "automorph count is for d < 0");
  return d == -3 ? 6 : d == -4 ? 4 : 2;
}

namespace {

long double log_of(const mpz_class& v) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(static_cast<long double>(m)) + static_cast<long double>(e) * std::numbers::ln2_v<long double>;
}

}  // namespace

// Walks the continued fraction of a generator of the order of discriminant d
// (or of Z[sqrt d] when d is 2 or 3 mod 4) until a convergent has norm +1.
PellSolution pell_min(i64 d) {
  if (d <= 0 || is_square(d)) throw Error(Errc::InvalidArgument, "d must be a positive non-square");
  const i64 r = mod(d, 4);
  i64 D = d, P = 0, Q = 1;
  if (r == 1) P = 1, Q = 2;
  else if (r == 0) D = d / 4;
  const i64 s = isqrt(D);
  // convergents p/q of (P + sqrt D) / Q
  mpz_class p_prev = 1, q_prev = 0, p_cur, q_cur;
  PellSolution out;
  out.d = d;
  for (bool first = true;; first = false) {
    const i64 a = (P + s) / Q;
    if (first) {
      p_cur = a;
      q_cur = 1;
    } else {
      mpz_class pn = a * p_cur + p_prev, qn = a * q_cur + q_prev;
      p_prev = p_cur;
      q_prev = q_cur;
      p_cur = pn;
      q_cur = qn;
    }
    P = a * Q - P;
    Q = (D - P * P) / Q;
    mpz_class t, u;
    if (r == 1) {
      t = 2 * p_cur - q_cur;
      u = q_cur;
    } else {
      t = 2 * p_cur;
      u = r == 0 ? q_cur : mpz_class(2 * q_cur);
    }
    const mpz_class norm4 = t * t - d * u * u;
    if (norm4 == -4) out.minus_solvable = true;
    if (norm4 == 4) {
      out.t0 = t;
      out.u0 = u;
      const long double lt = log_of(t);
      const long double ratio = std::exp(log_of(u) - lt) * std::sqrt(static_cast<long double>(d));
      out.log_epsilon = lt + std::log1p(ratio) - std::numbers::ln2_v<long double>;
      return out;
    }
  }
}

bool pell_minus_solvable(i64 d) { return pell_min(d).minus_solvable; }

RepresentationCount representation_count(i64 n, i64 d) {
  if (n <= 0) throw Error(Errc::InvalidArgument, "n must be positive");
  require_fundamental(d);
  if (gcd(n, d) != 1) throw Error(Errc::NotCoprime, "n and d must be coprime");
  RealPrimitiveCharacter chi = real_character(d);
  const i64 w = d < 0 ? automorph_count(d) : 1;
  RepresentationCount rc;
  i64 s = 0;
  for (i64 m = 1; m * m <= n; ++m) {
    if (n % m) continue;
    s += chi(m);
    if (m * m != n) s += chi(n / m);
  }
  rc.formula = w * s;
  if (d < 0) {
    rc.lattice = 0;
    const i64 D = -d;
    for (const QForm& f : reduced_forms(d)) {
      // 4a f(x,y) = (2ax + by)^2 + D y^2
      i64 ymax = isqrt(4 * f.a * n / D);
      for (i64 y = -ymax; y <= ymax; ++y) {
        i64 xmax = isqrt(4 * f.c * n / D) + 1;
        for (i64 x = -xmax; x <= xmax; ++x)
          if (f(x, y) == n) ++rc.lattice;
      }
    }
  }
  return rc;
}

ClassNumber class_number(i64 d, u64 terms) {
  require_fundamental(d);
  ClassNumber out;
  out.d = d;
  if (d < 0) {
    out.h = static_cast<i64>(reduced_forms(d).size());
    out.estimate = static_cast<double>(out.h);
    return out;
  }
  PellSolution pell = pell_min(d);
  const double scale = std::sqrt(static_cast<double>(d)) / static_cast<double>(pell.log_epsilon);
  if (terms == 0) terms = static_cast<u64>(std::ceil(10.0 * static_cast<double>(d - 1) * scale));
  terms = std::max<u64>(terms, static_cast<u64>(d));
  LSeriesEstimate L = L1_truncated(real_character(d), terms);
  out.analytic = true;
  out.terms = terms;
  out.estimate = L.value * scale;
  out.error_bound = L.tail_bound * scale;
  out.h = std::llround(out.estimate);
  if (out.error_bound >= 0.4 || std::fabs(out.estimate - static_cast<double>(out.h)) > out.error_bound || out.h < 1)
    throw Error(Errc::RoundingUnsafe, "truncated L-value does not determine h(" + std::to_string(d) + ")");
  return out;
}

i64 field_class_number(i64 d) {
  ClassNumber cn = class_number(d);
  if (d < 0 || pell_minus_solvable(d)) return cn.h;
  return cn.h / 2;
}

}  // namespace quadrex
