#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdal {

/// Domain error categories. Every library failure is reported as an `Error`
/// carrying one of these codes; the CLI maps them onto exit status 1.
enum class Errc {
  CycleInPrecedence,
  EventOrderIncomplete,
  EventOrderCycle,
  SourceNotMinimal,
  TargetNotMaximal,
  LabelMissing,
  EventOutOfRange,
  TooManyEvents,
  NotInterval,
  SequentialMismatch,
  InternalOrderCycle,
  ShapeMismatch,
  UnknownCell,
  DuplicateCell,
  PositionOutOfRange,
  InvalidPrecubicalSet,
  InvalidMap,
  IllFormedDiagram,
  InvalidPath,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hdal
