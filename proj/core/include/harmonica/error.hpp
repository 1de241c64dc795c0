#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonica {

/// Input and precondition failures. These are the caller's fault and are
/// reported, never asserted.
enum class Errc {
  LoopEdge,
  DuplicateId,
  EmptyGraph,
  UnknownVertex,
  UnknownEdge,
  Disconnected,
  NotAMorphism,
  EndpointMismatch,
  NotHarmonic,
  NotHarmonicAt,
  DegenerateAt,
  ConstantMorphism,
  SourceTargetMismatch,
  IncidenceViolation,
  NotBijective,
  BudgetExceeded,
  GenusTooSmall,
  HypothesisUnmet,
  BadTree,
  DisconnectedCover,
  DegenerateTree,
  InvalidGroupTable,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Consequences of theorems (fiber consistency of (r, w), exhaustiveness of
/// the branch-case analysis, well-definedness of the degree, ...). Raised only
/// when the library itself is wrong.
enum class Theorem {
  ClassificationGap,
  FiberInconsistent,
  NonconstantPreimageCount,
  StabilizerMultiplicity,
  LiftCountMismatch,
  CoverGenusIdentity,
  OrbitStabilizer,
};

std::string_view to_string(Theorem which) noexcept;

class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(Theorem which, const std::string& what);

  Theorem which() const noexcept { return which_; }

 private:
  Theorem which_;
};

}  // namespace harmonica
