#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadrex/analytic.hpp"
#include "quadrex/arith.hpp"

namespace quadrex {

// Unions of progressions {n + i b_j : i < s}, n >= 1, sharing the start n.
struct PatternCounts {
  int gamma = 0;              // size of the offset set W
  int support_exponent = 0;   // 1 + max W
  std::vector<i64> offsets;   // W, ascending
  i64 c_eps = 0;              // n with chi_p(n + w_i) = eps_i along W
  i64 c_sigma = 0;            // n whose window [n, n + max W] meets the residues (or non-residues) exactly in n + W
};

PatternCounts count_patterns_ap_b(const std::vector<i64>& b, int s, i64 p, const std::vector<int>& eps,
                                  int support_sign = 1);
std::vector<i64> progression_offsets(const std::vector<i64>& b, int s);

// Family {U_i (b_i n + S_i) : n >= 1}.
struct APFamilySpec {
  std::vector<i64> B;
  std::vector<std::vector<i64>> S;
};

// Groups equal b's: S_J = U {a_j + b_J i : i < s}.
APFamilySpec family_from_tuple(const std::vector<i64>& a, const std::vector<i64>& b, int s);

using IndexMask = std::uint32_t;  // subsets of [0, k), k <= 20

struct APParameters {
  int k = 0;
  i64 alpha = 0;
  i64 b_max = 0;
  std::vector<IndexMask> K_max;                 // ascending
  std::vector<std::vector<Rational>> T;         // T(K) for each entry of K_max
  i64 e = 0;
  std::vector<IndexMask> Lambda;                // even subsets, ascending, no repeats
  i64 union_size = 0;                           // |U b_i^-1 S_i|
  i64 cutoff = 1;                               // pieces are pairwise disjoint for n >= cutoff
};

APParameters compute_parameters(const APFamilySpec& spec);

enum class PrimeClass { Plus, Minus, NotAllowable };
const char* prime_class_name(PrimeClass c);

// chi_p(prod_{i in I} b_i) for I in Lambda, in Lambda order. Empty when p divides some b_i.
std::vector<int> signature(i64 p, const APFamilySpec& spec, const APParameters& params);
PrimeClass classify(i64 p, const APFamilySpec& spec, const APParameters& params);

// Number of n in [1, r(p)] with every element of U (b_i n + S_i) of character eps.
i64 count_q_epsilon(i64 p, const APFamilySpec& spec, int eps);
// r(p) = min_i floor((p - 1 - max S_i) / b_i)
i64 window_count(i64 p, const APFamilySpec& spec);

struct StandardTuple {
  std::vector<i64> a, b;
};

bool is_admissible(const StandardTuple& t);

struct OverlapBlock {
  std::vector<int> rows;                  // tuple indices ordered by a_i / b_i
  std::vector<i64> gaps;                  // consecutive quotient distances, all <= s - 1
  std::vector<std::vector<int>> columns;  // row sets met by each vertical line, left to right
};

struct QuotientDiagram {
  int s = 0;
  std::vector<Rational> quotients;        // a_i / b_i in tuple order
  std::vector<std::vector<i64>> class_gaps;  // gap tuple of every class of size >= 2
  std::vector<OverlapBlock> blocks;
  i64 alpha = 0;
  i64 e = 0;
  std::vector<IndexMask> Lambda;          // ascending, no repeats
};

QuotientDiagram quotient_diagram(const StandardTuple& t, int s);

// a_{i+1} = t_i (a_i + d_i b_i), b_{i+1} = t_i b_i
StandardTuple generate_tuple(const std::vector<i64>& d, const std::vector<i64>& t, i64 a1, i64 b1);

enum class PlusDensityCase { BlockProduct, UnitBlockSplit };

struct PlusDensity {
  int blocks = 0;           // m
  int block_rows = 0;       // sum of block sizes
  PlusDensityCase formula = PlusDensityCase::BlockProduct;
  double theoretical = 0;   // 2^(m - rows), or 2^(1 - rows)(2^m - 1) in the split case
  double independent_model = 0;  // 2^(m - rows): chi_p(b_i) constant on every block
  i64 prime_bound = 0;
  i64 allowable = 0;
  i64 plus = 0;
  double empirical() const { return allowable ? static_cast<double>(plus) / static_cast<double>(allowable) : 0.0; }
};

// Requires distinct square-free parts of the b_i with at most one equal to 1
// and the others multiplicatively independent mod squares.
void require_independent_squarefree_parts(const StandardTuple& t);
PlusDensity pi_plus_density(const StandardTuple& t, int s, i64 prime_bound);

}  // namespace quadrex
