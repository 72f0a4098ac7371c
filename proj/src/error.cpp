#include "pslekr/error.hpp"

namespace pslekr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::NotIrreducibleFound: return "NotIrreducibleFound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidConstraint: return "InvalidConstraint";
    case ErrorKind::UnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotIntegralParameters: return "NotIntegralParameters";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotInOmega: return "NotInOmega";
    case ErrorKind::NotIntersecting: return "NotIntersecting";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pslekr
