#include "eaf/status.h"

namespace eaf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownDefinition: return "UnknownDefinition";
    case ErrorCode::kBadFieldValue: return "BadFieldValue";
    case ErrorCode::kIncompatibleConnection: return "IncompatibleConnection";
    case ErrorCode::kOccupiedValueSlot: return "OccupiedValueSlot";
    case ErrorCode::kWouldCreateCycle: return "WouldCreateCycle";
    case ErrorCode::kUnknownBlock: return "UnknownBlock";
    case ErrorCode::kUnknownStack: return "UnknownStack";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kNumberOutOfRange: return "NumberOutOfRange";
    case ErrorCode::kAccessibilityDisabled: return "AccessibilityDisabled";
    case ErrorCode::kNoSelection: return "NoSelection";
    case ErrorCode::kNotInEditMode: return "NotInEditMode";
    case ErrorCode::kEmptyClipboard: return "EmptyClipboard";
    case ErrorCode::kAlreadyDetached: return "AlreadyDetached";
    case ErrorCode::kToolboxEmptyForContext: return "ToolboxEmptyForContext";
    case ErrorCode::kToolboxNotOpen: return "ToolboxNotOpen";
    case ErrorCode::kToolboxOpen: return "ToolboxOpen";
    case ErrorCode::kFieldEditActive: return "FieldEditActive";
    case ErrorCode::kNoOutput: return "NoOutput";
    case ErrorCode::kBadChord: return "BadChord";
    case ErrorCode::kUnknownCommand: return "UnknownCommand";
    case ErrorCode::kReservedChord: return "ReservedChord";
    case ErrorCode::kDuplicateBinding: return "DuplicateBinding";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kScriptParseError: return "ScriptParseError";
    case ErrorCode::kRuntimeError: return "RuntimeError";
  }
  return "Unknown";
}

}  // namespace eaf
