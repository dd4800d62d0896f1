#include "quadrex/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
  return bits_[r * words_ + c / 64] >> (c % 64) & 1;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = bits_[r * words_ + c / 64];
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

void GF2Matrix::xor_rows(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < words_; ++k) bits_[dst * words_ + k] ^= bits_[src * words_ + k];
}

bool GF2Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t k = 0; k < words_; ++k)
    if (bits_[r * words_ + k]) return false;
  return true;
}

std::size_t gf2_rank(GF2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      m.xor_rows(rank, pivot);
      m.xor_rows(pivot, rank);
      m.xor_rows(rank, pivot);
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<bool>> gf2_left_kernel(const GF2Matrix& m) {
  // eliminate on [M | I]; rows whose M part vanishes carry kernel vectors in the I part
  const std::size_t n = m.rows(), c = m.cols();
  GF2Matrix aug(n, c + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < c; ++k)
      if (m.get(r, k)) aug.set(r, k);
    aug.set(r, c + r);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && !aug.get(pivot, col)) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      aug.xor_rows(rank, pivot);
      aug.xor_rows(pivot, rank);
      aug.xor_rows(rank, pivot);
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && aug.get(r, col)) aug.xor_rows(r, rank);
    ++rank;
  }
  std::vector<std::vector<bool>> basis;
  for (std::size_t r = rank; r < n; ++r) {
    std::vector<bool> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = aug.get(r, c + k);
    basis.push_back(std::move(v));
  }
  return basis;
}

Incidence incidence_matrix(const std::vector<i64>& S) {
  std::vector<std::vector<i64>> supports;
  std::vector<i64> cols;
  for (i64 z : S) {
    if (z <= 0) throw Error(Errc::InvalidArgument, "elements must be positive integers");
    supports.push_back(squarefree_split(z).pi_odd);
    cols.insert(cols.end(), supports.back().begin(), supports.back().end());
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  Incidence inc{GF2Matrix(S.size(), cols.size()), cols};
  for (std::size_t r = 0; r < S.size(); ++r)
    for (i64 p : supports[r])
      inc.matrix.set(r, static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), p) - cols.begin()));
  return inc;
}

double Density::value() const { return obstructed ? 0.0 : std::ldexp(1.0, -exponent); }

bool obstruction_any_square(const std::vector<i64>& S) {
  if (S.empty()) return false;
  Incidence inc = incidence_matrix(S);
  return gf2_rank(inc.matrix) < S.size();
}

bool obstruction_odd_square(const std::vector<i64>& S) {
  if (S.empty()) return false;
  // weight parity is linear, so an odd-weight kernel vector exists iff a basis vector has odd weight
  for (const auto& v : gf2_left_kernel(incidence_matrix(S).matrix))
    if (std::count(v.begin(), v.end(), true) % 2) return true;
  return false;
}

Density density_residue_set(const std::vector<i64>& S) {
  if (S.empty()) return {};
  return {false, static_cast<int>(gf2_rank(incidence_matrix(S).matrix))};
}

Density density_nonresidue_set(const std::vector<i64>& S) {
  if (obstruction_odd_square(S)) return {true, 0};
  return density_residue_set(S);
}

Density density_pattern(const std::vector<i64>& S, const std::vector<int>& signs) {
  if (signs.size() != S.size()) throw Error(Errc::InvalidArgument, "one sign per element required");
  if (obstruction_any_square(S)) return {true, 0};
  return {false, static_cast<int>(S.size())};
}

EmpiricalDensity empirical_density(const std::vector<i64>& S, DensityMode mode, i64 bound,
                                   const std::vector<int>& signs) {
  if (mode == DensityMode::Pattern && signs.size() != S.size())
    throw Error(Errc::InvalidArgument, "one sign per element required");
  EmpiricalDensity e;
  e.prime_bound = bound;
  for (i64 p : primes_up_to(bound)) {
    ++e.primes;
    if (p == 2) continue;
    bool ok = true;
    for (std::size_t i = 0; i < S.size() && ok; ++i) {
      int want = mode == DensityMode::AllResidues ? 1 : mode == DensityMode::AllNonResidues ? -1 : signs[i];
      ok = legendre_fast(mod(S[i], p), p) == want;
    }
    if (ok) ++e.matching;
  }
  return e;
}

}  // namespace quadrex
