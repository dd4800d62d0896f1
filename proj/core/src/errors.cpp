#include "quadrex/errors.hpp"

namespace quadrex {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NoSolution: return "NoSolution";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::Incompatible: return "Incompatible";
    case Errc::FactorBudgetExceeded: return "FactorBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::LeadingCoeffZero: return "LeadingCoeffZero";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::RoundingUnsafe: return "RoundingUnsafe";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

IncompatibleError::IncompatibleError(std::size_t i, std::size_t j)
    : Error(Errc::Incompatible,
            "congruences " + std::to_string(i) + " and " + std::to_string(j) + " conflict"),
      i_(i),
      j_(j) {}

}  // namespace quadrex
