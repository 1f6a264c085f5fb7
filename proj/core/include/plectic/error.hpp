#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plectic {

enum class Errc {
  // group-core
  NonAssociative,
  NoIdentity,
  NotInvertible,
  NotASubgroup,
  GroupTooLarge,
  // abelian-lattice
  NoSolution,
  NotSurjective,
  NotSplit,
  ConstraintInfeasible,
  NotCommuting,
  IllDefinedHom,
  Overflow,
  // plectic / cm
  ContextMismatch,
  BadIndex,
  BadConjugation,
  InternalError,
  // recip
  DiagramNotCommuting,
  IncompatibleInclusion,
  NotCartesian,
  // actions
  NotInCMGroup,
  SignViolation,
  DeltaOutsideModel,
  NotInPi0Group,
  // cli / config
  ConfigError,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace plectic
