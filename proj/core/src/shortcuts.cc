#include "eaf/shortcuts.h"

#include <algorithm>
#include <cctype>
#include <set>

namespace eaf {

namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct NamedKey {
  const char* alias;
  const char* canonical;
};

constexpr NamedKey kNamedKeys[] = {
    {"esc", "Esc"},         {"escape", "Esc"},       {"enter", "Enter"},
    {"return", "Enter"},    {"delete", "Delete"},    {"del", "Delete"},
    {"backspace", "Backspace"}, {"space", "Space"},  {"tab", "Tab"},
    {"arrowup", "ArrowUp"}, {"arrowdown", "ArrowDown"},
    {"arrowleft", "ArrowLeft"}, {"arrowright", "ArrowRight"},
    {"up", "ArrowUp"},      {"down", "ArrowDown"},   {"left", "ArrowLeft"},
    {"right", "ArrowRight"}, {"home", "Home"},       {"end", "End"},
    {"pageup", "PageUp"},   {"pagedown", "PageDown"}, {"plus", "+"},
    {"minus", "-"},         {"slash", "/"},
};

std::optional<std::string> CanonicalKey(std::string_view token) {
  if (token.size() == 1) {
    unsigned char c = static_cast<unsigned char>(token[0]);
    if (c < 33 || c > 126)
      return std::nullopt;
    return std::string(1, static_cast<char>(std::toupper(c)));
  }
  std::string lower = Lower(token);
  for (const auto& named : kNamedKeys) {
    if (lower == named.alias)
      return std::string(named.canonical);
  }
  if (lower.size() >= 2 && lower.size() <= 3 && lower[0] == 'f' &&
      std::all_of(lower.begin() + 1, lower.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int n = std::stoi(lower.substr(1));
    if (n >= 1 && n <= 12)
      return "F" + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<uint8_t> ModifierBit(std::string_view token) {
  std::string lower = Lower(token);
  if (lower == "ctrl" || lower == "control") return kModCtrl;
  if (lower == "shift") return kModShift;
  if (lower == "alt" || lower == "option") return kModAlt;
  return std::nullopt;
}

Error BadChord(std::string_view text) {
  return MakeError(ErrorCode::kBadChord,
                   "cannot read key chord \"" + std::string(text) + "\"");
}

}  // namespace

Result<KeyChord> KeyChord::Parse(std::string_view text) {
  if (text.empty())
    return BadChord(text);
  std::string_view mods_part;
  std::string_view key_part;
  if (text == "+") {
    key_part = "+";
  } else if (text.size() >= 2 && text.substr(text.size() - 2) == "++") {
    key_part = "+";
    mods_part = text.substr(0, text.size() - 2);
    if (mods_part.empty())
      return BadChord(text);
  } else {
    size_t last = text.rfind('+');
    if (last == std::string_view::npos) {
      key_part = text;
    } else {
      key_part = text.substr(last + 1);
      mods_part = text.substr(0, last);
      if (mods_part.empty())
        return BadChord(text);
    }
  }
  KeyChord chord;
  while (!mods_part.empty()) {
    size_t plus = mods_part.find('+');
    std::string_view token = mods_part.substr(0, plus);
    auto bit = ModifierBit(token);
    if (!bit || (chord.modifiers & *bit))
      return BadChord(text);
    chord.modifiers |= *bit;
    if (plus == std::string_view::npos)
      break;
    mods_part.remove_prefix(plus + 1);
    if (mods_part.empty())
      return BadChord(text);
  }
  auto key = CanonicalKey(key_part);
  if (!key)
    return BadChord(text);
  chord.key = *key;
  return chord;
}

std::string KeyChord::ToString() const {
  std::string out;
  if (has(kModCtrl)) out += "Ctrl+";
  if (has(kModShift)) out += "Shift+";
  if (has(kModAlt)) out += "Alt+";
  return out + key;
}

namespace {

struct CommandInfo {
  CommandId id;
  const char* name;
  bool bindable;
};

constexpr CommandInfo kCommands[] = {
    {CommandId::kMoveUp, "MoveUp", true},
    {CommandId::kMoveLeft, "MoveLeft", true},
    {CommandId::kMoveDown, "MoveDown", true},
    {CommandId::kMoveRight, "MoveRight", true},
    {CommandId::kMoveIn, "MoveIn", true},
    {CommandId::kMoveOut, "MoveOut", true},
    {CommandId::kJumpToStack, "JumpToStack", true},
    {CommandId::kToggleEditMode, "ToggleEditMode", true},
    {CommandId::kWorkspaceCursorUp, "WorkspaceCursorUp", true},
    {CommandId::kWorkspaceCursorDown, "WorkspaceCursorDown", true},
    {CommandId::kWorkspaceCursorLeft, "WorkspaceCursorLeft", true},
    {CommandId::kWorkspaceCursorRight, "WorkspaceCursorRight", true},
    {CommandId::kOpenToolbox, "OpenToolbox", true},
    {CommandId::kCloseToolbox, "CloseToolbox", true},
    {CommandId::kLocateCursor, "LocateCursor", true},
    {CommandId::kCut, "Cut", true},
    {CommandId::kCopy, "Copy", true},
    {CommandId::kPaste, "Paste", true},
    {CommandId::kDelete, "Delete", true},
    {CommandId::kToggleComment, "ToggleComment", true},
    {CommandId::kDisconnect, "Disconnect", true},
    {CommandId::kToggleAssistant, "ToggleAssistant", true},
    {CommandId::kToggleShortcutsList, "ToggleShortcutsList", true},
    {CommandId::kCustomizeStackLabel, "CustomizeStackLabel", true},
    {CommandId::kRunProgram, "RunProgram", true},
    {CommandId::kAccessOutput, "AccessOutput", true},
    {CommandId::kToggleAccessibility, "ToggleAccessibility", true},
    {CommandId::kZoomIn, "ZoomIn", true},
    {CommandId::kZoomOut, "ZoomOut", true},
    {CommandId::kZoomReset, "ZoomReset", true},
    {CommandId::kConfirm, "Confirm", false},
    {CommandId::kFieldInput, "FieldInput", false},
    {CommandId::kFieldBackspace, "FieldBackspace", false},
    {CommandId::kFieldCommit, "FieldCommit", false},
    {CommandId::kFieldCancel, "FieldCancel", false},
    {CommandId::kPassThrough, "PassThrough", false},
};

const CommandInfo* InfoFor(CommandId id) {
  for (const auto& info : kCommands) {
    if (info.id == id)
      return &info;
  }
  return nullptr;
}

bool IsStackLetter(std::string_view arg) {
  return arg.size() == 1 && arg[0] >= 'A' && arg[0] <= 'Z';
}

}  // namespace

std::string_view CommandName(CommandId id) {
  const CommandInfo* info = InfoFor(id);
  return info ? info->name : "Unknown";
}

std::string Command::ToString() const {
  std::string out(CommandName(id));
  if (!arg.empty())
    out += "(" + arg + ")";
  return out;
}

Result<Command> Command::Parse(std::string_view text) {
  std::string_view name = text;
  std::string arg;
  size_t open = text.find('(');
  if (open != std::string_view::npos) {
    if (text.back() != ')')
      return MakeError(ErrorCode::kUnknownCommand, std::string(text));
    name = text.substr(0, open);
    arg = std::string(text.substr(open + 1, text.size() - open - 2));
  }
  for (const auto& info : kCommands) {
    if (info.bindable && Lower(info.name) == Lower(name)) {
      Command command{info.id, {}};
      if (info.id == CommandId::kJumpToStack) {
        for (char& c : arg) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (!IsStackLetter(arg))
          return MakeError(ErrorCode::kUnknownCommand,
                           "JumpToStack needs a letter A to Z");
        command.arg = arg;
      } else if (!arg.empty()) {
        return MakeError(ErrorCode::kUnknownCommand, std::string(text));
      }
      return command;
    }
  }
  return MakeError(ErrorCode::kUnknownCommand,
                   "unknown command " + std::string(text));
}

const Command* Keymap::Find(const KeyChord& chord) const {
  auto it = bindings.find(chord);
  return it == bindings.end() ? nullptr : &it->second;
}

std::vector<KeyChord> Keymap::ChordsFor(CommandId id,
                                        std::string_view arg) const {
  std::vector<KeyChord> out;
  for (const auto& [chord, command] : bindings) {
    if (command.id == id && (arg.empty() || command.arg == arg))
      out.push_back(chord);
  }
  return out;
}

KeyChord MasterToggleChord() {
  return KeyChord{kModCtrl | kModShift, "K"};
}

Keymap DefaultKeymap() {
  Keymap keymap;
  auto bind = [&](uint8_t mods, std::string key, CommandId id,
                  std::string arg = {}) {
    keymap.bindings[KeyChord{mods, std::move(key)}] = Command{id, std::move(arg)};
  };
  bind(0, "W", CommandId::kMoveUp);
  bind(0, "A", CommandId::kMoveLeft);
  bind(0, "S", CommandId::kMoveDown);
  bind(0, "D", CommandId::kMoveRight);
  bind(0, "F", CommandId::kMoveIn);
  bind(0, "Q", CommandId::kMoveOut);
  for (char c = 'A'; c <= 'Z'; ++c)
    bind(kModAlt, std::string(1, c), CommandId::kJumpToStack, std::string(1, c));
  bind(0, "E", CommandId::kToggleEditMode);
  bind(kModShift, "W", CommandId::kWorkspaceCursorUp);
  bind(kModShift, "S", CommandId::kWorkspaceCursorDown);
  bind(kModShift, "A", CommandId::kWorkspaceCursorLeft);
  bind(kModShift, "D", CommandId::kWorkspaceCursorRight);
  bind(0, "T", CommandId::kOpenToolbox);
  bind(0, "Esc", CommandId::kCloseToolbox);
  bind(0, "C", CommandId::kLocateCursor);
  bind(kModCtrl, "X", CommandId::kCut);
  bind(kModCtrl, "C", CommandId::kCopy);
  bind(kModCtrl, "V", CommandId::kPaste);
  bind(0, "Delete", CommandId::kDelete);
  bind(kModCtrl, "/", CommandId::kToggleComment);
  bind(kModShift, "X", CommandId::kDisconnect);
  bind(kModShift, "H", CommandId::kToggleAssistant);
  bind(kModShift, "K", CommandId::kToggleShortcutsList);
  bind(kModShift, "I", CommandId::kCustomizeStackLabel);
  bind(kModShift, "R", CommandId::kRunProgram);
  bind(kModShift, "O", CommandId::kAccessOutput);
  bind(kModCtrl | kModShift, "K", CommandId::kToggleAccessibility);
  bind(0, "+", CommandId::kZoomIn);
  bind(0, "-", CommandId::kZoomOut);
  bind(0, "0", CommandId::kZoomReset);
  return keymap;
}

Command Dispatch(const Keymap& keymap, const KeyChord& chord,
                 const DispatchContext& context) {
  if (chord == MasterToggleChord()) {
    const Command* bound = keymap.Find(chord);
    return bound ? *bound : Command{CommandId::kToggleAccessibility, {}};
  }
  if (!keymap.enabled)
    return Command{CommandId::kPassThrough, {}};
  if (context.field_edit && !chord.has(kModCtrl) && !chord.has(kModAlt)) {
    if (chord.key == "Enter") return Command{CommandId::kFieldCommit, {}};
    if (chord.key == "Esc") return Command{CommandId::kFieldCancel, {}};
    if (chord.key == "Backspace") return Command{CommandId::kFieldBackspace, {}};
    if (chord.key == "Space") return Command{CommandId::kFieldInput, " "};
    if (chord.is_printable()) {
      char c = chord.key[0];
      if (!chord.has(kModShift))
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return Command{CommandId::kFieldInput, std::string(1, c)};
    }
  }
  if (context.toolbox_open && chord.modifiers == 0 && chord.key == "Enter")
    return Command{CommandId::kConfirm, {}};
  if (const Command* bound = keymap.Find(chord))
    return *bound;
  return Command{CommandId::kPassThrough, {}};
}

Result<Keymap> Remap(const Keymap& keymap, std::string_view chord_text,
                     const Command& command) {
  auto chord = KeyChord::Parse(chord_text);
  if (!chord.ok())
    return chord.error();
  const CommandInfo* info = InfoFor(command.id);
  if (!info || !info->bindable)
    return MakeError(ErrorCode::kUnknownCommand, command.ToString());
  if (command.id == CommandId::kJumpToStack && !IsStackLetter(command.arg))
    return MakeError(ErrorCode::kUnknownCommand, command.ToString());
  if (*chord == MasterToggleChord() &&
      command.id != CommandId::kToggleAccessibility) {
    return MakeError(ErrorCode::kReservedChord,
                     chord->ToString() + " is reserved for the master switch");
  }
  Keymap updated = keymap;
  updated.bindings[*chord] = command;
  return updated;
}

Result<Keymap> ApplyKeymapOverrides(const Keymap& base, std::string_view text) {
  Keymap keymap = base;
  std::set<KeyChord> seen;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto trim = [](std::string_view s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string_view::npos) return std::string_view();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty())
      continue;
    // The chord itself may contain '=' ("Shift+="), so split on the last one.
    size_t eq = line.rfind('=');
    auto where = [&](const Error& e) {
      return MakeError(e.code, "line " + std::to_string(line_no) + ": " + e.detail);
    };
    if (eq == std::string_view::npos)
      return where(MakeError(ErrorCode::kParseError, "expected chord = command"));
    std::string_view chord_text = trim(line.substr(0, eq));
    std::string_view command_text = trim(line.substr(eq + 1));
    auto chord = KeyChord::Parse(chord_text);
    if (!chord.ok())
      return where(chord.error());
    if (!seen.insert(*chord).second) {
      return where(MakeError(ErrorCode::kDuplicateBinding,
                             chord->ToString() + " is bound twice"));
    }
    if (Lower(command_text) == "none") {
      if (*chord == MasterToggleChord()) {
        return where(MakeError(ErrorCode::kReservedChord,
                               chord->ToString() + " cannot be unbound"));
      }
      keymap.bindings.erase(*chord);
      continue;
    }
    auto command = Command::Parse(command_text);
    if (!command.ok())
      return where(command.error());
    auto remapped = Remap(keymap, chord->ToString(), *command);
    if (!remapped.ok())
      return where(remapped.error());
    keymap = std::move(*remapped);
  }
  return keymap;
}

const std::vector<ShortcutRow>& ShortcutSchema() {
  static const auto* rows = new std::vector<ShortcutRow>{
      {"Navigation", CommandId::kMoveUp, "move up to the previous block"},
      {"Navigation", CommandId::kMoveLeft, "move left to the previous item"},
      {"Navigation", CommandId::kMoveDown, "move down to the next block"},
      {"Navigation", CommandId::kMoveRight, "move right to the next item"},
      {"Navigation", CommandId::kMoveIn, "move in to the first nested item"},
      {"Navigation", CommandId::kMoveOut, "move out to the enclosing item"},
      {"Navigation", CommandId::kJumpToStack, "jump to the stack with that letter"},
      {"Mode", CommandId::kToggleEditMode, "switch between edit and navigation mode"},
      {"Workspace", CommandId::kWorkspaceCursorUp, "move the workspace cursor up"},
      {"Workspace", CommandId::kWorkspaceCursorDown, "move the workspace cursor down"},
      {"Workspace", CommandId::kWorkspaceCursorLeft, "move the workspace cursor left"},
      {"Workspace", CommandId::kWorkspaceCursorRight, "move the workspace cursor right"},
      {"Toolbox", CommandId::kOpenToolbox, "open the toolbox"},
      {"Toolbox", CommandId::kCloseToolbox, "close the toolbox and return to the workspace"},
      {"Announce", CommandId::kLocateCursor, "say where the cursor is"},
      {"Edit ops", CommandId::kCut, "cut the selected block"},
      {"Edit ops", CommandId::kCopy, "copy the selected block"},
      {"Edit ops", CommandId::kPaste, "paste at the current connection, edit mode"},
      {"Edit ops", CommandId::kDelete, "delete the selected block"},
      {"Edit ops", CommandId::kToggleComment, "add, hide or show a comment, edit mode"},
      {"Edit ops", CommandId::kDisconnect, "disconnect at the cursor, edit mode"},
      {"Assist", CommandId::kToggleAssistant, "turn the navigational assistant on or off"},
      {"Assist", CommandId::kToggleShortcutsList, "show or hide this list"},
      {"Assist", CommandId::kCustomizeStackLabel, "name the current stack"},
      {"Execution", CommandId::kRunProgram, "run the program"},
      {"Execution", CommandId::kAccessOutput, "read the program output"},
      {"Settings", CommandId::kToggleAccessibility, "turn keyboard accessibility on or off"},
  };
  return *rows;
}

std::string ShortcutsHelp(const Keymap& keymap) {
  if (!keymap.enabled)
    return "Keyboard accessibility disabled";
  std::string out;
  for (const auto& row : ShortcutSchema()) {
    std::vector<KeyChord> chords = keymap.ChordsFor(row.command);
    if (chords.empty())
      continue;
    std::string keys;
    if (row.command == CommandId::kJumpToStack) {
      bool full_alt = chords.size() == 26;
      for (const auto& chord : chords) {
        const Command* bound = keymap.Find(chord);
        if (chord.modifiers != kModAlt || !bound || bound->arg != chord.key)
          full_alt = false;
      }
      if (full_alt) {
        keys = "Alt+A to Alt+Z";
      }
    }
    if (keys.empty()) {
      for (const auto& chord : chords) {
        if (!keys.empty())
          keys += " or ";
        keys += chord.ToString();
      }
    }
    if (!out.empty())
      out += "\n";
    out += std::string(row.scope) + ": " + keys + ", " + std::string(row.action);
  }
  if (out.empty())
    return "Keyboard accessibility disabled";
  return out;
}

}  // namespace eaf
