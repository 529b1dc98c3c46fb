#include "eaf/navigation.h"

#include <deque>

#include "eaf/labeling.h"

namespace eaf {

size_t ToolboxView::entry_count() const {
  size_t n = 0;
  for (const auto& category : categories) n += category.def_ids.size();
  return n;
}

namespace {

std::string Plural(size_t n, std::string_view one, std::string_view many) {
  return std::to_string(n) + " " + std::string(n == 1 ? one : many);
}

std::optional<size_t> ElementIndexOfInput(const Workspace& ws,
                                          std::string_view parent,
                                          std::string_view input) {
  std::vector<ElementRef> children = Children(ws, parent);
  for (size_t i = 0; i < children.size(); ++i) {
    if (children[i].kind != ElementKind::kField && children[i].name == input)
      return i;
  }
  return std::nullopt;
}

BlockId SequenceHead(const Workspace& ws, BlockId id) {
  size_t guard = 0;
  while (auto pred = ws.Predecessor(id)) {
    id = *pred;
    if (++guard > ws.blocks().size())
      break;
  }
  return id;
}

// Where Out lands for a block that does not itself sit in a slot.
CursorLocation ContainerOf(const Workspace& ws, const BlockId& id) {
  BlockId head = SequenceHead(ws, id);
  auto link = ws.ParentOf(head);
  if (link && link->kind != LinkKind::kNext) {
    if (auto index = ElementIndexOfInput(ws, link->parent, link->input))
      return CursorLocation::Element(link->parent, *index);
  }
  const Stack* stack = ws.StackOf(id);
  return CursorLocation::StackHead(stack ? stack->label : std::string());
}

// "stack A" or "repeat body": the sequence a statement block lives in.
std::string SequenceName(const Workspace& ws, const BlockId& id) {
  CursorLocation container = ContainerOf(ws, id);
  if (container.kind == CursorLocation::Kind::kElement) {
    const BlockDefinition* def = ws.DefinitionOf(container.block);
    return (def ? def->label : std::string("block")) + " " +
           ElementName(ws, container.block, container.index);
  }
  return "stack " + container.label;
}

MoveResult Boundary(const CursorLocation& at, std::string reason) {
  MoveResult result;
  result.moved = false;
  result.location = at;
  result.event = MakeEvent(EventKind::kBoundary);
  result.event.Set("reason", std::move(reason));
  return result;
}

MoveResult Landed(const Workspace& ws, CursorLocation to,
                  const ToolboxView* toolbox) {
  MoveResult result;
  result.moved = true;
  result.event = DescribeLocation(ws, to, toolbox);
  result.location = std::move(to);
  return result;
}

std::string StackList(const Workspace& ws) {
  if (ws.stacks().empty())
    return "no stacks";
  std::string labels;
  for (const auto& stack : ws.stacks()) {
    if (!labels.empty())
      labels += ", ";
    labels += stack.label;
  }
  return Plural(ws.stacks().size(), "stack", "stacks") + ": " + labels;
}

std::string LabelOf(const Workspace& ws, std::string_view id) {
  const BlockDefinition* def = ws.DefinitionOf(id);
  return def ? def->label : std::string("block");
}

MoveResult MoveFromStackHead(const Workspace& ws, const CursorLocation& from,
                             Direction direction) {
  const auto& stacks = ws.stacks();
  size_t i = 0;
  while (i < stacks.size() && stacks[i].label != from.label) ++i;
  if (i == stacks.size())
    return Boundary(from, "Stack " + from.label + " no longer exists");
  const Stack& stack = stacks[i];
  switch (direction) {
    case Direction::kUp:
      if (i == 0)
        return Boundary(from, "First stack");
      return Landed(ws, CursorLocation::StackHead(stacks[i - 1].label), nullptr);
    case Direction::kDown:
      if (i + 1 == stacks.size())
        return Boundary(from, "Last stack");
      return Landed(ws, CursorLocation::StackHead(stacks[i + 1].label), nullptr);
    case Direction::kIn:
      return Landed(ws, CursorLocation::OnBlock(stack.top), nullptr);
    case Direction::kOut:
      return Landed(ws, CursorLocation::WorkspacePoint(stack.position), nullptr);
    case Direction::kLeft:
      return Boundary(from, "Nothing to the left of stack " + stack.label);
    case Direction::kRight:
      return Boundary(from, "Nothing to the right of stack " + stack.label);
  }
  return Boundary(from, "No move");
}

MoveResult MoveFromBlock(const Workspace& ws, const CursorLocation& from,
                         Direction direction) {
  const Block* block = ws.FindBlock(from.block);
  const BlockDefinition* def = ws.DefinitionOf(from.block);
  if (!block || !def)
    return Boundary(from, "Block no longer exists");
  const bool is_value = def->kind == BlockKind::kValue;
  auto link = ws.ParentOf(from.block);
  switch (direction) {
    case Direction::kDown:
      if (is_value)
        return Boundary(from, "No blocks below a value block");
      if (block->next)
        return Landed(ws, CursorLocation::OnBlock(*block->next), nullptr);
      return Boundary(from, "End of " + SequenceName(ws, from.block));
    case Direction::kUp:
      if (is_value)
        return Boundary(from, "No blocks above a value block");
      if (auto pred = ws.Predecessor(from.block))
        return Landed(ws, CursorLocation::OnBlock(*pred), nullptr);
      return Boundary(from, "Start of " + SequenceName(ws, from.block));
    case Direction::kIn:
      if (Children(ws, from.block).empty())
        return Boundary(from, def->label + " has nothing nested");
      return Landed(ws, CursorLocation::Element(from.block, 0), nullptr);
    case Direction::kOut:
      if (link && link->kind != LinkKind::kNext) {
        if (auto index = ElementIndexOfInput(ws, link->parent, link->input))
          return Landed(ws, CursorLocation::Element(link->parent, *index),
                        nullptr);
      }
      return Landed(ws, ContainerOf(ws, from.block), nullptr);
    case Direction::kLeft:
    case Direction::kRight: {
      const bool left = direction == Direction::kLeft;
      std::string side = left ? "left" : "right";
      if (!link || link->kind != LinkKind::kValueSlot)
        return Boundary(from, "Nothing to the " + side + " of " + def->label);
      const BlockDefinition* parent_def = ws.DefinitionOf(link->parent);
      const Block* parent = ws.FindBlock(link->parent);
      std::vector<BlockId> row;
      size_t mine = 0;
      for (const auto& input : parent_def->value_inputs) {
        auto it = parent->value_slots.find(input.name);
        if (it == parent->value_slots.end() || !it->second)
          continue;
        if (*it->second == from.block)
          mine = row.size();
        row.push_back(*it->second);
      }
      if (left && mine > 0)
        return Landed(ws, CursorLocation::OnBlock(row[mine - 1]), nullptr);
      if (!left && mine + 1 < row.size())
        return Landed(ws, CursorLocation::OnBlock(row[mine + 1]), nullptr);
      return Boundary(from, "No more values to the " + side + " in " +
                                parent_def->label);
    }
  }
  return Boundary(from, "No move");
}

MoveResult MoveFromElement(const Workspace& ws, const CursorLocation& from,
                           Direction direction) {
  std::vector<ElementRef> children = Children(ws, from.block);
  if (from.index >= children.size())
    return Boundary(from, "Item no longer exists");
  const ElementRef& element = children[from.index];
  std::string owner = LabelOf(ws, from.block);
  switch (direction) {
    case Direction::kLeft:
      if (from.index == 0)
        return Boundary(from, "First item in " + owner);
      return Landed(ws, CursorLocation::Element(from.block, from.index - 1),
                    nullptr);
    case Direction::kRight:
      if (from.index + 1 >= children.size())
        return Boundary(from, "Last item in " + owner);
      return Landed(ws, CursorLocation::Element(from.block, from.index + 1),
                    nullptr);
    case Direction::kOut:
      return Landed(ws, CursorLocation::OnBlock(from.block), nullptr);
    case Direction::kIn:
      if (element.kind == ElementKind::kField) {
        MoveResult result = Boundary(
            from, DescribeElement(ws, from.block, from.index) +
                      "; switch to edit mode to change it");
        result.field_target = true;
        return result;
      }
      if (!element.attached)
        return Boundary(from, "Empty connection: " +
                                  ElementName(ws, from.block, from.index));
      return Landed(ws, CursorLocation::OnBlock(*element.attached), nullptr);
    case Direction::kUp:
    case Direction::kDown:
      return Boundary(from, "Move left or right between the items of " + owner);
  }
  return Boundary(from, "No move");
}

MoveResult MoveInToolbox(const Workspace& ws, const CursorLocation& from,
                         Direction direction, const ToolboxView& toolbox) {
  if (from.category >= toolbox.categories.size())
    return Boundary(from, "Toolbox is empty");
  const ToolboxCategory& category = toolbox.categories[from.category];
  switch (direction) {
    case Direction::kUp:
      if (from.entry == 0)
        return Boundary(from, "First block in " + category.name);
      return Landed(ws, CursorLocation::ToolboxEntry(from.category, from.entry - 1),
                    &toolbox);
    case Direction::kDown:
      if (from.entry + 1 >= category.def_ids.size())
        return Boundary(from, "Last block in " + category.name);
      return Landed(ws, CursorLocation::ToolboxEntry(from.category, from.entry + 1),
                    &toolbox);
    case Direction::kLeft:
      if (from.category == 0)
        return Boundary(from, "First category");
      return Landed(ws, CursorLocation::ToolboxEntry(from.category - 1, 0),
                    &toolbox);
    case Direction::kRight:
      if (from.category + 1 >= toolbox.categories.size())
        return Boundary(from, "Last category");
      return Landed(ws, CursorLocation::ToolboxEntry(from.category + 1, 0),
                    &toolbox);
    case Direction::kIn:
    case Direction::kOut:
      break;
  }
  const BlockDefinition* def =
      from.entry < category.def_ids.size()
          ? ws.block_set().Find(category.def_ids[from.entry])
          : nullptr;
  return Boundary(from, "Press Enter to insert " +
                            (def ? def->label : std::string("a block")) +
                            ", Escape to close the toolbox");
}

}  // namespace

MoveResult Move(const Workspace& ws, const CursorLocation& from,
                Direction direction, const ToolboxView* toolbox) {
  switch (from.kind) {
    case CursorLocation::Kind::kStackHead:
      return MoveFromStackHead(ws, from, direction);
    case CursorLocation::Kind::kBlock:
      return MoveFromBlock(ws, from, direction);
    case CursorLocation::Kind::kElement:
      return MoveFromElement(ws, from, direction);
    case CursorLocation::Kind::kToolboxEntry:
      if (!toolbox)
        return Boundary(from, "Toolbox is closed");
      return MoveInToolbox(ws, from, direction, *toolbox);
    case CursorLocation::Kind::kWorkspacePoint:
      if (direction == Direction::kIn) {
        if (ws.stacks().empty())
          return Boundary(from, "Workspace empty");
        return Landed(ws, CursorLocation::StackHead(ws.stacks().front().label),
                      nullptr);
      }
      if (direction == Direction::kOut)
        return Boundary(from, "Already at the workspace level");
      return Boundary(from,
                      "Use Shift with a direction key to move the workspace "
                      "cursor");
  }
  return Boundary(from, "No move");
}

MoveResult JumpToStack(const Workspace& ws, const CursorLocation& from,
                       std::string_view letter) {
  std::string label(letter);
  for (char& c : label) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (const Stack* stack = ws.FindStack(label))
    return Landed(ws, CursorLocation::OnBlock(stack->top), nullptr);
  MoveResult result;
  result.location = from;
  result.event = MakeEvent(EventKind::kStackMissing);
  result.event.Set("letter", label);
  result.event.Set("stacks", StackList(ws));
  return result;
}

std::string ShortTarget(const Workspace& ws, const CursorLocation& location,
                        const ToolboxView* toolbox) {
  switch (location.kind) {
    case CursorLocation::Kind::kWorkspacePoint:
      return "workspace";
    case CursorLocation::Kind::kStackHead:
      return "stack " + location.label;
    case CursorLocation::Kind::kBlock:
      return DescribeBlockParts(ws, location.block).phrase_full;
    case CursorLocation::Kind::kElement:
      return LabelOf(ws, location.block) + ", " +
             ElementName(ws, location.block, location.index);
    case CursorLocation::Kind::kToolboxEntry:
      return DescribeLocation(ws, location, toolbox).vars["entry"];
  }
  return {};
}

Position AnchorPosition(const Workspace& ws, const CursorLocation& location) {
  switch (location.kind) {
    case CursorLocation::Kind::kWorkspacePoint:
      return location.point;
    case CursorLocation::Kind::kStackHead:
      if (const Stack* stack = ws.FindStack(location.label))
        return stack->position;
      break;
    case CursorLocation::Kind::kBlock:
    case CursorLocation::Kind::kElement:
      if (const Stack* stack = ws.StackOf(location.block))
        return stack->position;
      break;
    case CursorLocation::Kind::kToolboxEntry:
      break;
  }
  return Position{};
}

MoveResult MoveWorkspaceCursor(const Workspace& ws, const CursorLocation& from,
                               Direction direction) {
  Position point = AnchorPosition(ws, from);
  switch (direction) {
    case Direction::kUp: point.y -= kWorkspaceCursorStep; break;
    case Direction::kDown: point.y += kWorkspaceCursorStep; break;
    case Direction::kLeft: point.x -= kWorkspaceCursorStep; break;
    case Direction::kRight: point.x += kWorkspaceCursorStep; break;
    case Direction::kIn:
    case Direction::kOut:
      return Boundary(from, "The workspace cursor only moves in four directions");
  }
  return Landed(ws, CursorLocation::WorkspacePoint(point), nullptr);
}

Event DescribeLocation(const Workspace& ws, const CursorLocation& location,
                       const ToolboxView* toolbox) {
  switch (location.kind) {
    case CursorLocation::Kind::kWorkspacePoint: {
      Event event = MakeEvent(EventKind::kMovedToWorkspace);
      event.Set("x", FormatNumber(location.point.x));
      event.Set("y", FormatNumber(location.point.y));
      event.Set("stacks", StackList(ws));
      return event;
    }
    case CursorLocation::Kind::kStackHead: {
      Event event = MakeEvent(EventKind::kMovedToStack);
      const Stack* stack = ws.FindStack(location.label);
      if (!stack) {
        event.Set("stack", "Stack " + location.label);
        return event;
      }
      auto order = Preorder(ws, stack->label);
      event.Set("stack", StackReference(*stack));
      event.Set("count", Plural(order.ok() ? order->size() : 0, "block", "blocks"));
      event.Set("top", DescribeBlockParts(ws, stack->top).phrase_full);
      return event;
    }
    case CursorLocation::Kind::kBlock: {
      Event event = MakeEvent(EventKind::kMovedToBlock);
      return WithBlock(event, ws, location.block);
    }
    case CursorLocation::Kind::kElement: {
      Event event = MakeEvent(EventKind::kMovedToElement);
      BlockDescription owner = DescribeBlockParts(ws, location.block);
      event.Set("where", owner.where);
      event.Set("owner", owner.phrase_full);
      event.Set("element", DescribeElement(ws, location.block, location.index));
      std::string extra;
      const BlockDefinition* def = ws.DefinitionOf(location.block);
      if (def) {
        size_t i = location.index;
        if (i < def->fields.size()) {
          const FieldSpec& spec = def->fields[i];
          if (spec.kind == FieldKind::kChoice) {
            extra = ", choices:";
            for (size_t k = 0; k < spec.options.size(); ++k)
              extra += (k ? ", " : " ") + spec.options[k];
          } else {
            extra = spec.kind == FieldKind::kNumber ? ", number field"
                                                    : ", text field";
          }
        } else if (i - def->fields.size() < def->value_inputs.size()) {
          extra = ", accepts " +
                  std::string(ValueTypeName(
                      def->value_inputs[i - def->fields.size()].accepted));
        } else {
          extra = ", statement input";
        }
      }
      event.Set("element_details", extra);
      return event;
    }
    case CursorLocation::Kind::kToolboxEntry: {
      Event event = MakeEvent(EventKind::kMovedToToolboxEntry);
      if (!toolbox || location.category >= toolbox->categories.size())
        return event.Set("entry", "toolbox"), event;
      const ToolboxCategory& category = toolbox->categories[location.category];
      const BlockDefinition* def =
          location.entry < category.def_ids.size()
              ? ws.block_set().Find(category.def_ids[location.entry])
              : nullptr;
      event.Set("entry", def ? def->label : std::string("unknown"));
      event.Set("category", category.name);
      event.Set("position", std::to_string(location.entry + 1) + " of " +
                                std::to_string(category.def_ids.size()));
      return event;
    }
  }
  return MakeEvent(EventKind::kBoundary);
}

namespace {

std::string FirstChord(const Keymap& keymap, CommandId id,
                       std::string_view fallback) {
  auto chords = keymap.ChordsFor(id);
  return chords.empty() ? std::string(fallback) : chords.front().ToString();
}

}  // namespace

Event Locate(const Workspace& ws, const CursorLocation& location, Mode mode,
             const Keymap& keymap, const ToolboxView* toolbox) {
  std::string mode_text = std::string(ModeName(mode)) + " mode";
  std::string text;
  switch (location.kind) {
    case CursorLocation::Kind::kWorkspacePoint:
      if (ws.empty()) {
        text = "Workspace empty; press " +
               FirstChord(keymap, CommandId::kOpenToolbox, "the toolbox key") +
               " to open toolbox";
      } else {
        text = "Workspace cursor at " + FormatNumber(location.point.x) + ", " +
               FormatNumber(location.point.y) + "; " + StackList(ws);
      }
      break;
    case CursorLocation::Kind::kStackHead: {
      const Stack* stack = ws.FindStack(location.label);
      if (!stack) {
        text = "Stack " + location.label + " no longer exists";
        break;
      }
      auto order = Preorder(ws, stack->label);
      text = StackReference(*stack) + ", " +
             Plural(order.ok() ? order->size() : 0, "block", "blocks") +
             ", top: " + DescribeBlockParts(ws, stack->top).phrase_full + ", " +
             mode_text;
      break;
    }
    case CursorLocation::Kind::kBlock: {
      BlockDescription d = DescribeBlockParts(ws, location.block);
      text = d.where + ", " + d.phrase_full + ", " + mode_text;
      const Stack* stack = ws.StackOf(location.block);
      auto number = ws.numbering().find(location.block);
      if (stack && number != ws.numbering().end()) {
        int n = number->second.number;
        if (n > 1) {
          auto prev = Resolve(ws, stack->label, n - 1);
          if (prev.ok())
            text += "; previous: " + DescribeBlockParts(ws, *prev).phrase_full;
        }
        if (n < number->second.total) {
          auto next = Resolve(ws, stack->label, n + 1);
          if (next.ok())
            text += "; next: " + DescribeBlockParts(ws, *next).phrase_full;
        }
      }
      const Block* block = ws.FindBlock(location.block);
      if (block && block->comment && block->comment->visible)
        text += "; comment: " + block->comment->text;
      break;
    }
    case CursorLocation::Kind::kElement: {
      BlockDescription d = DescribeBlockParts(ws, location.block);
      text = d.where + ", " + d.phrase_full + ", " +
             DescribeElement(ws, location.block, location.index) + ", " +
             mode_text;
      break;
    }
    case CursorLocation::Kind::kToolboxEntry: {
      Event entry = DescribeLocation(ws, location, toolbox);
      text = "Toolbox, " + entry.vars["category"] + " category, " +
             entry.vars["entry"] + ", " + entry.vars["position"];
      break;
    }
  }
  Event event = MakeEvent(EventKind::kLocate);
  event.Set("text", text);
  return event;
}

Event AssistantPreview(const Workspace& ws, const CursorLocation& location,
                       const Keymap& keymap, const ToolboxView* toolbox) {
  struct Probe {
    Direction direction;
    CommandId command;
  };
  constexpr Probe kProbes[] = {
      {Direction::kUp, CommandId::kMoveUp},
      {Direction::kLeft, CommandId::kMoveLeft},
      {Direction::kDown, CommandId::kMoveDown},
      {Direction::kRight, CommandId::kMoveRight},
      {Direction::kIn, CommandId::kMoveIn},
      {Direction::kOut, CommandId::kMoveOut},
  };
  std::string text;
  for (const auto& probe : kProbes) {
    auto chords = keymap.ChordsFor(probe.command);
    if (chords.empty())
      continue;
    CursorLocation copy = location;
    MoveResult result = Move(ws, copy, probe.direction, toolbox);
    if (!result.moved)
      continue;
    std::string target = ShortTarget(ws, result.location, toolbox);
    if (probe.direction == Direction::kIn)
      target = "enter " + target;
    if (!text.empty())
      text += " ";
    text += chords.front().ToString() + ": " + target + ".";
  }
  if (text.empty())
    text = "No moves from here.";
  Event event = MakeEvent(EventKind::kAssistantPreview);
  event.Set("text", text);
  return event;
}

std::set<CursorLocation> ReachableSet(const Workspace& ws) {
  std::set<CursorLocation> seen;
  std::deque<CursorLocation> queue;
  auto visit = [&](const CursorLocation& location) {
    if (seen.insert(location).second)
      queue.push_back(location);
  };
  CursorLocation start = CursorLocation::WorkspacePoint({0, 0});
  visit(start);
  for (char c = 'A'; c <= 'Z'; ++c) {
    MoveResult jump = JumpToStack(ws, start, std::string(1, c));
    if (jump.moved)
      visit(jump.location);
  }
  constexpr Direction kAll[] = {Direction::kUp,    Direction::kDown,
                                Direction::kLeft,  Direction::kRight,
                                Direction::kIn,    Direction::kOut};
  while (!queue.empty()) {
    CursorLocation current = queue.front();
    queue.pop_front();
    for (Direction direction : kAll) {
      MoveResult result = Move(ws, current, direction);
      if (result.moved)
        visit(result.location);
    }
  }
  return seen;
}

bool IsValidLocation(const Workspace& ws, const CursorLocation& location,
                     const ToolboxView* toolbox) {
  switch (location.kind) {
    case CursorLocation::Kind::kWorkspacePoint:
      return true;
    case CursorLocation::Kind::kStackHead:
      return ws.FindStack(location.label) != nullptr;
    case CursorLocation::Kind::kBlock:
      return ws.FindBlock(location.block) != nullptr;
    case CursorLocation::Kind::kElement:
      return ws.FindBlock(location.block) != nullptr &&
             location.index < Children(ws, location.block).size();
    case CursorLocation::Kind::kToolboxEntry:
      return toolbox && location.category < toolbox->categories.size() &&
             location.entry <
                 toolbox->categories[location.category].def_ids.size();
  }
  return false;
}

}  // namespace eaf
