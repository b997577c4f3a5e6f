#include "edgeglue/error.hpp"

namespace edgeglue {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSigning: return "InvalidSigning";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::VertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InvalidRootedPattern: return "InvalidRootedPattern";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::OddCycleLength: return "OddCycleLength";
    case ErrorCode::InvalidAttachIndex: return "InvalidAttachIndex";
    case ErrorCode::InvalidPartialMap: return "InvalidPartialMap";
    case ErrorCode::EmptyForbiddenSet: return "EmptyForbiddenSet";
    case ErrorCode::InfeasibleInput: return "InfeasibleInput";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PartSizeMismatch: return "PartSizeMismatch";
    case ErrorCode::EmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::CorruptStore: return "CorruptStore";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace edgeglue
