#include "eaf/cursor.h"

#include <tuple>

namespace eaf {

std::string_view ModeName(Mode mode) {
  return mode == Mode::kEdit ? "edit" : "navigation";
}

std::string_view DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
    case Direction::kIn: return "in";
    case Direction::kOut: return "out";
  }
  return "?";
}

CursorLocation CursorLocation::WorkspacePoint(Position p) {
  CursorLocation c;
  c.kind = Kind::kWorkspacePoint;
  c.point = p;
  return c;
}

CursorLocation CursorLocation::StackHead(std::string label) {
  CursorLocation c;
  c.kind = Kind::kStackHead;
  c.label = std::move(label);
  return c;
}

CursorLocation CursorLocation::OnBlock(BlockId id) {
  CursorLocation c;
  c.kind = Kind::kBlock;
  c.block = std::move(id);
  return c;
}

CursorLocation CursorLocation::Element(BlockId id, size_t index) {
  CursorLocation c;
  c.kind = Kind::kElement;
  c.block = std::move(id);
  c.index = index;
  return c;
}

CursorLocation CursorLocation::ToolboxEntry(size_t category, size_t entry) {
  CursorLocation c;
  c.kind = Kind::kToolboxEntry;
  c.category = category;
  c.entry = entry;
  return c;
}

std::string CursorLocation::ToString() const {
  switch (kind) {
    case Kind::kWorkspacePoint:
      return "WorkspacePoint(" + FormatNumber(point.x) + "," +
             FormatNumber(point.y) + ")";
    case Kind::kStackHead:
      return "StackHead(" + label + ")";
    case Kind::kBlock:
      return "Block(" + block + ")";
    case Kind::kElement:
      return "Element(" + block + "," + std::to_string(index) + ")";
    case Kind::kToolboxEntry:
      return "ToolboxEntry(" + std::to_string(category) + "," +
             std::to_string(entry) + ")";
  }
  return "?";
}

namespace {

auto Key(const CursorLocation& c) {
  return std::tie(c.kind, c.point.x, c.point.y, c.label, c.block, c.index,
                  c.category, c.entry);
}

}  // namespace

bool CursorLocation::operator==(const CursorLocation& other) const {
  return Key(*this) == Key(other);
}

bool CursorLocation::operator<(const CursorLocation& other) const {
  return Key(*this) < Key(other);
}

}  // namespace eaf
