#include "fqg/error.hpp"

namespace fqg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoInvariantFunctional: return "NoInvariantFunctional";
    case ErrorCode::NonUniqueHaar: return "NonUniqueHaar";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ExpansionFailed: return "ExpansionFailed";
    case ErrorCode::NotInDualSubspace: return "NotInDualSubspace";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::CoactionAxiomFailed: return "CoactionAxiomFailed";
    case ErrorCode::ModeUnavailable: return "ModeUnavailable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fqg
