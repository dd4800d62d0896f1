#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadrex/arith.hpp"

namespace quadrex {

// {p odd prime : p mod modulus in classes} minus excluded_primes.
// modulus 1 with classes {0} stands for every odd prime outside the exclusions.
struct ResidueClassSet {
  i64 modulus = 1;
  std::vector<i64> classes;
  std::vector<i64> excluded_primes;

  bool contains(i64 p) const;
  std::string to_json() const;
};

struct ClassSetPair {
  ResidueClassSet plus;
  ResidueClassSet minus;
};

// q is -1, 2 or an odd prime.
ClassSetPair fundamental_problem(i64 q);

// Throws for |pi_odd(d)| > 20.
ClassSetPair basic_problem(i64 d);

// The modulus m(d) for non-square d.
i64 class_modulus(i64 d);

struct VerifyReport {
  i64 primes_checked = 0;
  std::vector<i64> counterexamples;
};

// sign +1 checks the set against chi_p(d) = 1, sign -1 against chi_p(d) = -1.
VerifyReport verify_class_set(const ResidueClassSet& set, i64 d, i64 bound, int sign = 1);

}  // namespace quadrex
