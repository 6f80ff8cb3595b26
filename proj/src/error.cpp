#include "kgsolve/error.hpp"

namespace kgsolve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::UnsupportedBranch: return "UnsupportedBranch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ComplexDeltaPrime: return "ComplexDeltaPrime";
    case ErrorKind::UnboundEnergy: return "UnboundEnergy";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::StiffnessFailure: return "StiffnessFailure";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace kgsolve
