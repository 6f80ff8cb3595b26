#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgsolve {

enum class ErrorKind {
  NegativeRadicand,
  UnsupportedBranch,
  DomainError,
  ComplexDeltaPrime,
  UnboundEnergy,
  NotNormalizable,
  NoConvergence,
  NoSignChange,
  StiffnessFailure,
  ConfigMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells the failure class apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kgsolve
