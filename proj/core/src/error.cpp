#include "harmonica/error.hpp"

namespace harmonica {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotAMorphism: return "NotAMorphism";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::NotHarmonic: return "NotHarmonic";
    case Errc::NotHarmonicAt: return "NotHarmonicAt";
    case Errc::DegenerateAt: return "DegenerateAt";
    case Errc::ConstantMorphism: return "ConstantMorphism";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::IncidenceViolation: return "IncidenceViolation";
    case Errc::NotBijective: return "NotBijective";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::BadTree: return "BadTree";
    case Errc::DisconnectedCover: return "DisconnectedCover";
    case Errc::DegenerateTree: return "DegenerateTree";
    case Errc::InvalidGroupTable: return "InvalidGroupTable";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Theorem which) noexcept {
  switch (which) {
    case Theorem::ClassificationGap: return "ClassificationGap";
    case Theorem::FiberInconsistent: return "FiberInconsistent";
    case Theorem::NonconstantPreimageCount: return "NonconstantPreimageCount";
    case Theorem::StabilizerMultiplicity: return "StabilizerMultiplicity";
    case Theorem::LiftCountMismatch: return "LiftCountMismatch";
    case Theorem::CoverGenusIdentity: return "CoverGenusIdentity";
    case Theorem::OrbitStabilizer: return "OrbitStabilizer";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

TheoremViolation::TheoremViolation(Theorem which, const std::string& what)
    : std::logic_error(std::string(to_string(which)) + ": " + what), which_(which) {}

}  // namespace harmonica
