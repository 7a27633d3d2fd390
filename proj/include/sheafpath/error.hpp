#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sheafpath {

enum class ErrorCode {
  DuplicateId,
  SelfLoop,
  ParallelEdge,
  NonPositiveWeight,
  DegreeViolation,
  SourceEqualsSink,
  UnknownEndpoint,
  UnknownVertex,
  UnknownEdge,
  StalkMismatch,
  CellAlreadyAssigned,
  NotASection,
  NotGlobalSection,
  InvalidPath,
  PathTouchesSourceOrSinkInteriorly,
  NotSourceToSink,
  PathDoesNotStartAtSource,
  GraphMismatch,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them onto stable exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace sheafpath
