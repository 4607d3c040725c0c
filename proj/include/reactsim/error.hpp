#pragma once

#include <stdexcept>
#include <string>

namespace reactsim {

enum class ErrorKind {
  InvalidParams,
  NotApplicable,
  EmptyTrace,
  DegenerateDenominator,
  InexactDivision,
  InvalidBoundary,
  HypothesisViolated,
  CorruptTrace,
  BinningMismatch,
  InvalidConfig,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reactsim
