#include "sheafpath/error.hpp"

namespace sheafpath {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::SourceEqualsSink: return "SourceEqualsSink";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::StalkMismatch: return "StalkMismatch";
    case ErrorCode::CellAlreadyAssigned: return "CellAlreadyAssigned";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::NotGlobalSection: return "NotGlobalSection";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::PathTouchesSourceOrSinkInteriorly: return "PathTouchesSourceOrSinkInteriorly";
    case ErrorCode::NotSourceToSink: return "NotSourceToSink";
    case ErrorCode::PathDoesNotStartAtSource: return "PathDoesNotStartAtSource";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace sheafpath
