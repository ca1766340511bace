#include "braidrack/error.hpp"

namespace braidrack {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RowNotPermutation: return "RowNotPermutation";
    case ErrorKind::SelfDistributivityFails: return "SelfDistributivityFails";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::AffineNotARack: return "AffineNotARack";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::GroupSizeCap: return "GroupSizeCap";
    case ErrorKind::OrbitSizeCap: return "OrbitSizeCap";
    case ErrorKind::EmptySeed: return "EmptySeed";
    case ErrorKind::ImmunityMismatch: return "ImmunityMismatch";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::CocycleConditionFails: return "CocycleConditionFails";
    case ErrorKind::CharacterInconsistent: return "CharacterInconsistent";
    case ErrorKind::NotInCentralizer: return "NotInCentralizer";
    case ErrorKind::CentralizerNotGenerated: return "CentralizerNotGenerated";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::ProbeMismatch: return "ProbeMismatch";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace braidrack
