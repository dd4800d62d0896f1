#pragma once

#include <cstdint>
#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v = true);
  void xor_rows(std::size_t dst, std::size_t src);
  bool row_is_zero(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(GF2Matrix m);

// Basis of {x in F_2^rows : sum of the selected rows is 0}, each as a row-index mask.
std::vector<std::vector<bool>> gf2_left_kernel(const GF2Matrix& m);

struct Incidence {
  GF2Matrix matrix;
  std::vector<i64> primes;  // column labels, ascending
};

// Rows are odd-multiplicity prime supports of the elements of S.
Incidence incidence_matrix(const std::vector<i64>& S);

// density 2^-exponent, or obstructed (density 0)
struct Density {
  bool obstructed = false;
  int exponent = 0;
  double value() const;
};

Density density_residue_set(const std::vector<i64>& S);
Density density_nonresidue_set(const std::vector<i64>& S);
Density density_pattern(const std::vector<i64>& S, const std::vector<int>& signs);

bool obstruction_odd_square(const std::vector<i64>& S);
bool obstruction_any_square(const std::vector<i64>& S);

enum class DensityMode { AllResidues, AllNonResidues, Pattern };

struct EmpiricalDensity {
  i64 prime_bound = 0;
  i64 primes = 0;
  i64 matching = 0;
  double ratio() const { return primes ? static_cast<double>(matching) / static_cast<double>(primes) : 0.0; }
};

// Fraction of primes p <= X with the requested character values on S; primes
// dividing an element of S never match.
EmpiricalDensity empirical_density(const std::vector<i64>& S, DensityMode mode, i64 bound,
                                   const std::vector<int>& signs = {});

}  // namespace quadrex
