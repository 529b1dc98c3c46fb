#ifndef EAF_SESSION_H_
#define EAF_SESSION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaf/announcements.h"
#include "eaf/editing.h"
#include "eaf/runtime.h"
#include "eaf/shortcuts.h"

namespace eaf {

inline constexpr double kZoomStep = 1.2;
inline constexpr double kMinZoom = 0.25;
inline constexpr double kMaxZoom = 4.0;

enum class ZoomOp { kIn, kOut, kReset };

struct SessionOptions {
  Keymap keymap = DefaultKeymap();
  Verbosity verbosity = Verbosity::kStandard;
  MessageTemplates templates = MessageTemplates::Default();
  long long step_limit = kDefaultStepLimit;
};

// Result of one chord.
struct Step {
  KeyChord chord;
  Command command;
  std::vector<Announcement> announcements;
};

// Engine facade: resolves chords, routes commands and renders every
// resulting event.
class Session {
 public:
  explicit Session(Workspace ws = Workspace(), SessionOptions options = {});

  Step Apply(const KeyChord& chord, std::string_view arg = {});
  // Runs a resolved command directly; |arg| overrides the command's own.
  std::vector<Announcement> Execute(const Command& command,
                                    std::string_view arg = {});

  const EditorState& state() const { return state_; }
  EditorState& mutable_state() { return state_; }
  const Workspace& workspace() const { return state_.workspace; }
  const CursorLocation& cursor() const { return state_.cursor; }
  Mode mode() const { return state_.mode; }
  double zoom() const { return zoom_; }
  Verbosity verbosity() const { return options_.verbosity; }
  void set_verbosity(Verbosity v) { options_.verbosity = v; }
  const Keymap& keymap() const { return options_.keymap; }
  bool assistant_on() const { return assistant_on_; }
  bool accessibility_on() const { return options_.keymap.enabled; }
  bool help_open() const { return help_open_; }
  const std::optional<Output>& last_output() const { return last_output_; }

  // Structural validity plus a cursor that points at something real.
  Status CheckInvariants() const;

 private:
  std::vector<Event> Route(const Command& command, std::string_view arg);
  std::vector<Event> MoveCursor(Direction direction);
  std::vector<Event> Zoom(ZoomOp op);
  std::vector<Event> RunProgram();
  std::vector<Event> AccessOutput();
  std::vector<Announcement> RenderAll(const std::vector<Event>& events) const;

  EditorState state_;
  SessionOptions options_;
  double zoom_ = 1.0;
  bool assistant_on_ = false;
  bool help_open_ = false;
  std::optional<Output> last_output_;
};

}  // namespace eaf

#endif  // EAF_SESSION_H_
