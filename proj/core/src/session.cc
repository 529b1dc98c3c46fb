#include "eaf/session.h"

#include <cctype>
#include <cmath>

#include "eaf/navigation.h"

namespace eaf {

namespace {

std::string Plural(size_t n, std::string_view one, std::string_view many) {
  return std::to_string(n) + " " + std::string(n == 1 ? one : many);
}

std::string Percent(double zoom) {
  return std::to_string(static_cast<long long>(std::lround(zoom * 100)));
}

bool AllowedWithToolbox(CommandId id) {
  switch (id) {
    case CommandId::kMoveUp:
    case CommandId::kMoveDown:
    case CommandId::kMoveLeft:
    case CommandId::kMoveRight:
    case CommandId::kMoveIn:
    case CommandId::kMoveOut:
    case CommandId::kConfirm:
    case CommandId::kOpenToolbox:
    case CommandId::kCloseToolbox:
    case CommandId::kLocateCursor:
    case CommandId::kToggleAssistant:
    case CommandId::kToggleShortcutsList:
    case CommandId::kToggleAccessibility:
    case CommandId::kZoomIn:
    case CommandId::kZoomOut:
    case CommandId::kZoomReset:
      return true;
    default:
      return false;
  }
}

bool IsFieldCommand(CommandId id) {
  return id == CommandId::kFieldInput || id == CommandId::kFieldBackspace ||
         id == CommandId::kFieldCommit || id == CommandId::kFieldCancel;
}

// "ToggleEditMode" -> "toggle edit mode".
std::string ActionName(CommandId id) {
  std::string out;
  for (char c : CommandName(id)) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!out.empty())
        out += ' ';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

std::vector<Event> Failure(std::string_view action, ErrorCode code,
                           std::string detail) {
  return {ErrorEvent(action, Error{code, std::move(detail)})};
}

}  // namespace

Session::Session(Workspace ws, SessionOptions options)
    : state_(std::move(ws)), options_(std::move(options)) {
  state_.cursor = CursorLocation::WorkspacePoint({0, 0});
}

Step Session::Apply(const KeyChord& chord, std::string_view arg) {
  DispatchContext context;
  context.field_edit = state_.field_edit.has_value();
  context.toolbox_open = state_.toolbox.open;
  Step step;
  step.chord = chord;
  step.command = Dispatch(options_.keymap, chord, context);
  if (step.command.id == CommandId::kPassThrough)
    return step;
  step.announcements = Execute(step.command, arg);
  return step;
}

std::vector<Announcement> Session::Execute(const Command& command,
                                           std::string_view arg) {
  if (command.id == CommandId::kPassThrough)
    return {};
  std::string effective = arg.empty() ? command.arg : std::string(arg);
  CursorLocation before = state_.cursor;
  std::vector<Event> events = Route(command, effective);
  if (assistant_on_ && !(state_.cursor == before) && !state_.field_edit) {
    const ToolboxView* view =
        state_.toolbox.open ? &state_.toolbox.view : nullptr;
    events.push_back(AssistantPreview(state_.workspace, state_.cursor,
                                      options_.keymap, view));
  }
  return RenderAll(events);
}

std::vector<Announcement> Session::RenderAll(
    const std::vector<Event>& events) const {
  std::vector<Announcement> out;
  out.reserve(events.size());
  for (const auto& event : events)
    out.push_back(Render(event, options_.verbosity, options_.templates));
  return out;
}

std::vector<Event> Session::Route(const Command& command,
                                  std::string_view arg) {
  const CommandId id = command.id;
  if (state_.field_edit && !IsFieldCommand(id) &&
      id != CommandId::kToggleAccessibility) {
    return Failure(ActionName(id), ErrorCode::kFieldEditActive,
                   "finish the field edit with Enter or Escape first");
  }
  if (state_.toolbox.open && !AllowedWithToolbox(id)) {
    return Failure(ActionName(id), ErrorCode::kToolboxOpen,
                   "close the toolbox first");
  }
  switch (id) {
    case CommandId::kMoveUp: return MoveCursor(Direction::kUp);
    case CommandId::kMoveDown: return MoveCursor(Direction::kDown);
    case CommandId::kMoveLeft: return MoveCursor(Direction::kLeft);
    case CommandId::kMoveRight: return MoveCursor(Direction::kRight);
    case CommandId::kMoveIn: return MoveCursor(Direction::kIn);
    case CommandId::kMoveOut: return MoveCursor(Direction::kOut);
    case CommandId::kJumpToStack: {
      MoveResult result = JumpToStack(state_.workspace, state_.cursor, arg);
      state_.cursor = result.location;
      return {result.event};
    }
    case CommandId::kWorkspaceCursorUp:
    case CommandId::kWorkspaceCursorDown:
    case CommandId::kWorkspaceCursorLeft:
    case CommandId::kWorkspaceCursorRight: {
      Direction d = id == CommandId::kWorkspaceCursorUp     ? Direction::kUp
                    : id == CommandId::kWorkspaceCursorDown ? Direction::kDown
                    : id == CommandId::kWorkspaceCursorLeft ? Direction::kLeft
                                                            : Direction::kRight;
      MoveResult result = MoveWorkspaceCursor(state_.workspace, state_.cursor, d);
      state_.cursor = result.location;
      return {result.event};
    }
    case CommandId::kToggleEditMode: return ToggleMode(state_);
    case CommandId::kOpenToolbox: return OpenToolbox(state_);
    case CommandId::kCloseToolbox: return CloseToolbox(state_);
    case CommandId::kConfirm: return Insert(state_);
    case CommandId::kLocateCursor: {
      const ToolboxView* view =
          state_.toolbox.open ? &state_.toolbox.view : nullptr;
      return {Locate(state_.workspace, state_.cursor, state_.mode,
                     options_.keymap, view)};
    }
    case CommandId::kCut: return Cut(state_);
    case CommandId::kCopy: return Copy(state_);
    case CommandId::kPaste: return Paste(state_);
    case CommandId::kDelete: return Delete(state_);
    case CommandId::kToggleComment: return ToggleComment(state_, arg);
    case CommandId::kDisconnect: return Disconnect(state_);
    case CommandId::kToggleAssistant:
      assistant_on_ = !assistant_on_;
      if (!assistant_on_)
        return {MakeEvent(EventKind::kAssistantOff)};
      return {MakeEvent(EventKind::kAssistantOn),
              AssistantPreview(state_.workspace, state_.cursor,
                               options_.keymap,
                               state_.toolbox.open ? &state_.toolbox.view
                                                   : nullptr)};
    case CommandId::kToggleShortcutsList: {
      help_open_ = !help_open_;
      if (!help_open_)
        return {MakeEvent(EventKind::kShortcutsClosed)};
      Event event = MakeEvent(EventKind::kShortcutsList);
      event.Set("listing", ShortcutsHelp(options_.keymap));
      return {event};
    }
    case CommandId::kCustomizeStackLabel: return RenameStack(state_, arg);
    case CommandId::kRunProgram: return RunProgram();
    case CommandId::kAccessOutput: return AccessOutput();
    case CommandId::kToggleAccessibility:
      options_.keymap.enabled = !options_.keymap.enabled;
      if (!options_.keymap.enabled)
        state_.field_edit.reset();
      return {MakeEvent(options_.keymap.enabled ? EventKind::kAccessibilityOn
                                                : EventKind::kAccessibilityOff)};
    case CommandId::kZoomIn: return Zoom(ZoomOp::kIn);
    case CommandId::kZoomOut: return Zoom(ZoomOp::kOut);
    case CommandId::kZoomReset: return Zoom(ZoomOp::kReset);
    case CommandId::kFieldInput: return FieldType(state_, arg);
    case CommandId::kFieldBackspace: return FieldBackspace(state_);
    case CommandId::kFieldCommit: return FieldCommit(state_);
    case CommandId::kFieldCancel: return FieldCancel(state_);
    case CommandId::kPassThrough: return {};
  }
  return {};
}

std::vector<Event> Session::MoveCursor(Direction direction) {
  const ToolboxView* view =
      state_.toolbox.open ? &state_.toolbox.view : nullptr;
  MoveResult result = Move(state_.workspace, state_.cursor, direction, view);
  if (result.field_target && state_.mode == Mode::kEdit)
    return StartFieldEdit(state_);
  state_.cursor = result.location;
  return {result.event};
}

std::vector<Event> Session::Zoom(ZoomOp op) {
  if (op == ZoomOp::kReset) {
    zoom_ = 1.0;
    Event event = MakeEvent(EventKind::kZoomReset);
    event.Set("percent", Percent(zoom_));
    return {event};
  }
  double next = op == ZoomOp::kIn ? zoom_ * kZoomStep : zoom_ / kZoomStep;
  Event event = MakeEvent(EventKind::kZoomChanged);
  if (next >= kMaxZoom - 1e-9) {
    next = kMaxZoom;
    event = MakeEvent(EventKind::kZoomLimit);
    event.Set("limit", "maximum");
  } else if (next <= kMinZoom + 1e-9) {
    next = kMinZoom;
    event = MakeEvent(EventKind::kZoomLimit);
    event.Set("limit", "minimum");
  }
  zoom_ = next;
  event.Set("percent", Percent(zoom_));
  return {event};
}

std::vector<Event> Session::RunProgram() {
  last_output_ = Run(state_.workspace, options_.step_limit);
  const Output& out = *last_output_;
  Event event = MakeEvent(out.status == RunStatus::kOk ? EventKind::kRunFinished
                                                       : EventKind::kRunFailed);
  event.Set("count", Plural(out.lines.size(), "line", "lines") + " of output");
  event.Set("steps", std::to_string(out.steps));
  event.Set("message", out.message);
  return {event};
}

std::vector<Event> Session::AccessOutput() {
  if (!last_output_)
    return {MakeEvent(EventKind::kNoOutput)};
  const Output& out = *last_output_;
  std::vector<Event> events;
  Event summary = MakeEvent(EventKind::kOutputSummary);
  summary.Set("count", Plural(out.lines.size(), "line", "lines"));
  summary.Set("status", out.status == RunStatus::kOk
                            ? std::string("ok")
                            : std::string(RunStatusName(out.status)) + ": " +
                                  out.message);
  events.push_back(std::move(summary));
  for (const auto& line : out.lines) {
    Event event = MakeEvent(EventKind::kOutputLine);
    event.Set("line", line.empty() ? "blank line" : line);
    events.push_back(std::move(event));
  }
  return events;
}

Status Session::CheckInvariants() const {
  std::vector<Violation> violations = Validate(state_.workspace);
  if (!violations.empty()) {
    return MakeError(ErrorCode::kSchemaViolation,
                     violations.front().path + ": " +
                         std::string(ViolationKindName(violations.front().kind)));
  }
  const ToolboxView* view =
      state_.toolbox.open ? &state_.toolbox.view : nullptr;
  if (!IsValidLocation(state_.workspace, state_.cursor, view)) {
    return MakeError(ErrorCode::kUnknownBlock,
                     "cursor points nowhere: " + state_.cursor.ToString());
  }
  if (state_.toolbox.open &&
      !IsValidLocation(state_.workspace, state_.toolbox.saved_cursor)) {
    return MakeError(ErrorCode::kUnknownBlock, "saved cursor points nowhere");
  }
  if (zoom_ < kMinZoom || zoom_ > kMaxZoom)
    return MakeError(ErrorCode::kNumberOutOfRange, "zoom out of range");
  return Status::Ok();
}

}  // namespace eaf
