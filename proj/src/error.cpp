#include "hdal/error.hpp"

namespace hdal {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CycleInPrecedence: return "CycleInPrecedence";
    case Errc::EventOrderIncomplete: return "EventOrderIncomplete";
    case Errc::EventOrderCycle: return "EventOrderCycle";
    case Errc::SourceNotMinimal: return "SourceNotMinimal";
    case Errc::TargetNotMaximal: return "TargetNotMaximal";
    case Errc::LabelMissing: return "LabelMissing";
    case Errc::EventOutOfRange: return "EventOutOfRange";
    case Errc::TooManyEvents: return "TooManyEvents";
    case Errc::NotInterval: return "NotInterval";
    case Errc::SequentialMismatch: return "SequentialMismatch";
    case Errc::InternalOrderCycle: return "InternalOrderCycle";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnknownCell: return "UnknownCell";
    case Errc::DuplicateCell: return "DuplicateCell";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::InvalidPrecubicalSet: return "InvalidPrecubicalSet";
    case Errc::InvalidMap: return "InvalidMap";
    case Errc::IllFormedDiagram: return "IllFormedDiagram";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hdal
