#include "plectic/error.hpp"

namespace plectic {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotSplit: return "NotSplit";
    case Errc::ConstraintInfeasible: return "ConstraintInfeasible";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::IllDefinedHom: return "IllDefinedHom";
    case Errc::Overflow: return "Overflow";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::BadIndex: return "BadIndex";
    case Errc::BadConjugation: return "BadConjugation";
    case Errc::InternalError: return "InternalError";
    case Errc::DiagramNotCommuting: return "DiagramNotCommuting";
    case Errc::IncompatibleInclusion: return "IncompatibleInclusion";
    case Errc::NotCartesian: return "NotCartesian";
    case Errc::NotInCMGroup: return "NotInCMGroup";
    case Errc::SignViolation: return "SignViolation";
    case Errc::DeltaOutsideModel: return "DeltaOutsideModel";
    case Errc::NotInPi0Group: return "NotInPi0Group";
    case Errc::ConfigError: return "ConfigError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace plectic
