#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidrack {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  RowNotPermutation,
  SelfDistributivityFails,
  UnknownPreset,
  AffineNotARack,
  ElementNotInGroup,
  GroupSizeCap,
  OrbitSizeCap,
  EmptySeed,
  ImmunityMismatch,
  NotAField,
  ZeroScalar,
  CocycleConditionFails,
  CharacterInconsistent,
  NotInCentralizer,
  CentralizerNotGenerated,
  NotHomogeneous,
  DegreeCap,
  ProbeMismatch,
  SizeCapExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braidrack
