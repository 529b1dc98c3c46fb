#ifndef EAF_SHORTCUTS_H_
#define EAF_SHORTCUTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaf/status.h"

namespace eaf {

enum Modifier : uint8_t {
  kModCtrl = 1 << 0,
  kModShift = 1 << 1,
  kModAlt = 1 << 2,
};

// A key plus modifiers. |key| is canonical: an upper-case letter, a single
// printable symbol or digit, or a named key such as "Esc" or "Delete".
struct KeyChord {
  uint8_t modifiers = 0;
  std::string key;

  // Accepts "ctrl+shift+k", "Alt+d", "+", "Ctrl++", "Escape", ...
  static Result<KeyChord> Parse(std::string_view text);
  // Canonical "Ctrl+Shift+Alt+K" form.
  std::string ToString() const;

  bool has(Modifier m) const { return (modifiers & m) != 0; }
  bool is_printable() const { return key.size() == 1; }

  auto operator<=>(const KeyChord&) const = default;
};

enum class CommandId {
  kMoveUp,
  kMoveLeft,
  kMoveDown,
  kMoveRight,
  kMoveIn,
  kMoveOut,
  kJumpToStack,
  kToggleEditMode,
  kWorkspaceCursorUp,
  kWorkspaceCursorDown,
  kWorkspaceCursorLeft,
  kWorkspaceCursorRight,
  kOpenToolbox,
  kCloseToolbox,
  kLocateCursor,
  kCut,
  kCopy,
  kPaste,
  kDelete,
  kToggleComment,
  kDisconnect,
  kToggleAssistant,
  kToggleShortcutsList,
  kCustomizeStackLabel,
  kRunProgram,
  kAccessOutput,
  kToggleAccessibility,
  kZoomIn,
  kZoomOut,
  kZoomReset,
  // Context-routed; never stored in a keymap.
  kConfirm,
  kFieldInput,
  kFieldBackspace,
  kFieldCommit,
  kFieldCancel,
  kPassThrough,
};

std::string_view CommandName(CommandId id);

struct Command {
  CommandId id = CommandId::kPassThrough;
  // Stack letter for kJumpToStack, typed character for kFieldInput.
  std::string arg;

  // "MoveUp", "JumpToStack(D)", "FieldInput(5)".
  std::string ToString() const;
  // Parses names accepted in keymap files; routed-only commands are
  // rejected with kUnknownCommand.
  static Result<Command> Parse(std::string_view text);

  bool operator==(const Command&) const = default;
};

struct Keymap {
  std::map<KeyChord, Command> bindings;
  bool enabled = true;

  const Command* Find(const KeyChord& chord) const;
  // Chords bound to |id| in canonical order; jump chords filtered by letter
  // when |arg| is non-empty.
  std::vector<KeyChord> ChordsFor(CommandId id, std::string_view arg = {}) const;
};

// The master switch chord; it can never be rebound.
KeyChord MasterToggleChord();

// The standard schema: WASD/F/Q movement, Alt+letter stack jumps, E for
// mode, Shift+WASD workspace cursor, T/Esc toolbox, C locate, edit chords,
// Shift+H/K/I assists, Shift+R/O execution, Ctrl+Shift+K master switch and
// +/-/0 zoom. Arrow keys stay unbound.
Keymap DefaultKeymap();

struct DispatchContext {
  bool field_edit = false;
  bool toolbox_open = false;
};

// Resolves a chord. Disabled keymaps pass everything through except the
// master toggle; field editing captures printable keys, Enter and Esc.
Command Dispatch(const Keymap& keymap, const KeyChord& chord,
                 const DispatchContext& context = {});

// Returns a copy with |chord| bound to |command|.
Result<Keymap> Remap(const Keymap& keymap, std::string_view chord,
                     const Command& command);

// Applies a `chord = command` override file on top of |base|. '#' starts a
// comment; `none` unbinds. A chord listed twice is kDuplicateBinding.
Result<Keymap> ApplyKeymapOverrides(const Keymap& base, std::string_view text);

// One row of the published shortcut schema.
struct ShortcutRow {
  std::string_view scope;
  CommandId command;
  std::string_view action;
};

// The 27 schema rows in listing order (zoom keys are not part of it).
const std::vector<ShortcutRow>& ShortcutSchema();

// Listing of active bindings grouped by scope, one line per schema row with
// at least one chord, or "Keyboard accessibility disabled".
std::string ShortcutsHelp(const Keymap& keymap);

}  // namespace eaf

#endif  // EAF_SHORTCUTS_H_
