#ifndef EAF_EDITING_H_
#define EAF_EDITING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eaf/announcements.h"
#include "eaf/cursor.h"
#include "eaf/navigation.h"
#include "eaf/workspace.h"

namespace eaf {

enum class ClipOrigin { kCut, kCopy };

struct Clipboard {
  nlohmann::json content;  // SubtreeToJson form.
  ClipOrigin origin = ClipOrigin::kCopy;
  int paste_count = 0;
};

struct ToolboxState {
  bool open = false;
  std::vector<std::string> filtered_entries;
  ToolboxView view;
  CursorLocation saved_cursor;
  std::optional<ConnectionRef> context;
};

struct FieldEdit {
  BlockId block;
  size_t index = 0;
  std::string buffer;
};

struct EditorState {
  explicit EditorState(Workspace ws = Workspace())
      : workspace(std::move(ws)) {}

  Workspace workspace;
  CursorLocation cursor;
  Mode mode = Mode::kNavigation;
  std::optional<Clipboard> clipboard;
  std::vector<ToolboxCategory> categories = StandardToolboxCategories();
  ToolboxState toolbox;
  std::optional<FieldEdit> field_edit;
};

// The connection an edit at |cursor| targets: an input element's slot, or
// the Next connection of a statement block. Nothing elsewhere.
std::optional<ConnectionRef> ConnectionContext(const Workspace& ws,
                                               const CursorLocation& cursor);

// Definitions whose fresh block could be connected at |context|, in block
// set order. No context admits every definition.
std::vector<std::string> CompatibleEntries(
    const Workspace& ws, const std::optional<ConnectionRef>& context);

// "times input of repeat 10 times", "after print hi".
std::string DescribeConnection(const Workspace& ws, const ConnectionRef& ref);

// Every operation returns the events to announce; failures come back as a
// single error event and leave the state untouched.
std::vector<Event> ToggleMode(EditorState& state);
std::vector<Event> Cut(EditorState& state);
std::vector<Event> Copy(EditorState& state);
std::vector<Event> Paste(EditorState& state);
std::vector<Event> Delete(EditorState& state);
std::vector<Event> Disconnect(EditorState& state);
std::vector<Event> ToggleComment(EditorState& state, std::string_view text);
std::vector<Event> RenameStack(EditorState& state, std::string_view name);

std::vector<Event> OpenToolbox(EditorState& state);
std::vector<Event> CloseToolbox(EditorState& state);
// Inserts the focused toolbox entry.
std::vector<Event> Insert(EditorState& state);
std::vector<Event> InsertDefinition(EditorState& state,
                                    std::string_view def_id);

std::vector<Event> StartFieldEdit(EditorState& state);
std::vector<Event> FieldType(EditorState& state, std::string_view text);
std::vector<Event> FieldBackspace(EditorState& state);
std::vector<Event> FieldCommit(EditorState& state);
std::vector<Event> FieldCancel(EditorState& state);

// Paste of the clipboard at an explicit target, bypassing the cursor. A
// missing target makes a new stack at |position|.
std::vector<Event> PasteAt(EditorState& state,
                           const std::optional<ConnectionRef>& target,
                           Position position);

}  // namespace eaf

#endif  // EAF_EDITING_H_
