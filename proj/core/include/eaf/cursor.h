#ifndef EAF_CURSOR_H_
#define EAF_CURSOR_H_

#include <string>
#include <string_view>

#include "eaf/workspace.h"

namespace eaf {

enum class Mode { kNavigation, kEdit };

std::string_view ModeName(Mode mode);

enum class Direction { kUp, kDown, kLeft, kRight, kIn, kOut };

std::string_view DirectionName(Direction direction);

// The current focus target. Only the members relevant to |kind| are
// meaningful; the rest stay at their defaults so that equality and ordering
// behave.
struct CursorLocation {
  enum class Kind { kWorkspacePoint, kStackHead, kBlock, kElement, kToolboxEntry };

  Kind kind = Kind::kWorkspacePoint;
  Position point;
  std::string label;
  BlockId block;
  size_t index = 0;     // Element child index.
  size_t category = 0;  // Toolbox category.
  size_t entry = 0;     // Toolbox entry within the category.

  static CursorLocation WorkspacePoint(Position p);
  static CursorLocation StackHead(std::string label);
  static CursorLocation OnBlock(BlockId id);
  static CursorLocation Element(BlockId id, size_t index);
  static CursorLocation ToolboxEntry(size_t category, size_t entry);

  bool is_block() const { return kind == Kind::kBlock; }
  bool is_element() const { return kind == Kind::kElement; }

  // Compact debug form, e.g. "Element(b3,1)".
  std::string ToString() const;

  bool operator==(const CursorLocation& other) const;
  bool operator<(const CursorLocation& other) const;
};

}  // namespace eaf

#endif  // EAF_CURSOR_H_
