#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgeglue {

enum class ErrorCode {
  SizeExceeded,
  ParseError,
  InvalidGraph,
  InvalidSigning,
  EdgeNotInGraph,
  VertexNotInGraph,
  NotATree,
  InvalidRootedPattern,
  SignMismatch,
  OddCycleLength,
  InvalidAttachIndex,
  InvalidPartialMap,
  EmptyForbiddenSet,
  InfeasibleInput,
  TooFewEdges,
  PreconditionViolated,
  PartSizeMismatch,
  EmptyCandidateSet,
  InvariantViolation,
  CorruptStore,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code. Thrown by every module.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace edgeglue
