#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqg {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NoInvariantFunctional,
  NonUniqueHaar,
  NotPositive,
  ExpansionFailed,
  NotInDualSubspace,
  InvalidGroupTable,
  NotAHomomorphism,
  NotAnAutomorphism,
  CoactionAxiomFailed,
  ModeUnavailable,
  ParseError,
  SchemaVersionMismatch,
  UnknownPreset,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Structural failure: the inputs do not describe the object an operation
/// expects. Failed identities are reported through VerificationReport instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fqg
