#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadrex {

enum class Errc {
  InvalidArgument,
  NotCoprime,
  NoSolution,
  ModuliNotCoprime,
  Incompatible,
  FactorBudgetExceeded,
  BudgetExceeded,
  LeadingCoeffZero,
  NotAdmissible,
  ConditionViolated,
  RoundingUnsafe,
};

const char* errc_name(Errc c);

// Domain failures raised by library operations. Empty solution sets are
// ordinary return values and never surface here.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// successive_substitution failure naming the first offending pair (0-based).
class IncompatibleError : public Error {
 public:
  IncompatibleError(std::size_t i, std::size_t j);
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

}  // namespace quadrex
