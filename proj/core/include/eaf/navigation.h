#ifndef EAF_NAVIGATION_H_
#define EAF_NAVIGATION_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eaf/announcements.h"
#include "eaf/block_set.h"
#include "eaf/cursor.h"
#include "eaf/shortcuts.h"
#include "eaf/workspace.h"

namespace eaf {

inline constexpr double kWorkspaceCursorStep = 20;

// Categories currently shown by an open toolbox (already filtered).
struct ToolboxView {
  std::vector<ToolboxCategory> categories;

  size_t entry_count() const;
};

struct MoveResult {
  bool moved = false;
  CursorLocation location;
  Event event;
  // In was pressed on a field: the caller may start field editing.
  bool field_target = false;
};

// One step of the layer model:
//
//   StackHead  Up/Down: previous/next stack   In: top block   Out: workspace
//   Block      Up/Down: statement sequence    In: first child
//              Out: enclosing element or stack head
//              Left/Right: neighbouring value block in the same parent row
//   Element    Left/Right: sibling element    In: attached block / first
//              body block (fields and empty connections are boundaries)
//              Out: owning block
//   Workspace  In: first stack
//   Toolbox    Up/Down: entries   Left/Right: categories
//
// A move that cannot happen keeps the location and describes the boundary.
MoveResult Move(const Workspace& ws, const CursorLocation& from,
                Direction direction, const ToolboxView* toolbox = nullptr);

// Alt+letter: lands on the top block of the stack with that letter label.
MoveResult JumpToStack(const Workspace& ws, const CursorLocation& from,
                       std::string_view letter);

// Steps the free workspace point by 20 units. A non-point cursor seeds the
// point from its stack position.
MoveResult MoveWorkspaceCursor(const Workspace& ws, const CursorLocation& from,
                               Direction direction);

// Landing announcement for |location| (what a successful move says).
Event DescribeLocation(const Workspace& ws, const CursorLocation& location,
                       const ToolboxView* toolbox = nullptr);

// Brief name of a location: "print hi", "repeat, times input", "stack A".
std::string ShortTarget(const Workspace& ws, const CursorLocation& location,
                        const ToolboxView* toolbox = nullptr);

// Position of the stack |location| sits in, or the point itself.
Position AnchorPosition(const Workspace& ws, const CursorLocation& location);

// Cursor locator text: stack, block number, description, mode and the
// neighbouring blocks.
Event Locate(const Workspace& ws, const CursorLocation& location, Mode mode,
             const Keymap& keymap, const ToolboxView* toolbox = nullptr);

// Dry-runs every direction and lists the ones that would move.
Event AssistantPreview(const Workspace& ws, const CursorLocation& location,
                       const Keymap& keymap,
                       const ToolboxView* toolbox = nullptr);

// Closure of Move() in all six directions plus stack jumps, starting from
// the workspace origin. Test oracle support.
std::set<CursorLocation> ReachableSet(const Workspace& ws);

// True when |location| refers to entities that exist in |ws|.
bool IsValidLocation(const Workspace& ws, const CursorLocation& location,
                     const ToolboxView* toolbox = nullptr);

}  // namespace eaf

#endif  // EAF_NAVIGATION_H_
