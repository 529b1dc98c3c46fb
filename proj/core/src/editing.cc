#include "eaf/editing.h"

#include <algorithm>

#include "eaf/labeling.h"
#include "eaf/serialization.h"

namespace eaf {

namespace {

constexpr double kNewStackOffset = 40;

std::vector<Event> Fail(std::string_view action, ErrorCode code,
                        std::string detail) {
  return {ErrorEvent(action, Error{code, std::move(detail)})};
}

std::vector<Event> Fail(std::string_view action, const Error& error) {
  return {ErrorEvent(action, error)};
}

std::string Plural(size_t n, std::string_view one, std::string_view many) {
  return std::to_string(n) + " " + std::string(n == 1 ? one : many);
}

Event StackEvent(EventKind kind, const Workspace& ws, const Stack& stack) {
  Event event = MakeEvent(kind);
  event.Set("stack", StackReference(stack));
  auto order = Preorder(ws, stack.label);
  event.Set("count",
            Plural(order.ok() ? order->size() : 0, "block", "blocks"));
  return event;
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

// Cursor target once |id| (and its nested blocks) is gone from |before|.
CursorLocation LandingAfterRemoval(const Workspace& before, const BlockId& id) {
  if (auto pred = before.Predecessor(id))
    return CursorLocation::OnBlock(*pred);
  const Block* block = before.FindBlock(id);
  if (block && block->next)
    return CursorLocation::OnBlock(*block->next);
  if (auto link = before.ParentOf(id)) {
    if (auto index = ElementIndexOfInput(before, link->parent, link->input))
      return CursorLocation::Element(link->parent, *index);
  }
  const Stack* stack = before.StackOf(id);
  return CursorLocation::WorkspacePoint(stack ? stack->position : Position{});
}

Position NewStackPosition(const Workspace& ws, const CursorLocation& cursor) {
  if (cursor.kind == CursorLocation::Kind::kWorkspacePoint)
    return cursor.point;
  Position p = AnchorPosition(ws, cursor);
  return Position{p.x + kNewStackOffset, p.y + kNewStackOffset};
}

const BlockId* SelectedBlock(const EditorState& state) {
  return state.cursor.kind == CursorLocation::Kind::kBlock
             ? &state.cursor.block
             : nullptr;
}

// Emits StackRetired for every label in |before| missing from |after|.
void NoteRetired(const Workspace& before, const Workspace& after,
                 std::vector<Event>& events) {
  for (const auto& stack : before.stacks()) {
    if (!after.FindStack(stack.label)) {
      Event event = MakeEvent(EventKind::kStackRetired);
      event.Set("stack", StackReference(stack));
      events.push_back(std::move(event));
    }
  }
}

// Places the new stack topped by |id| at |target|, or leaves it standing
// alone when there is no target.
Status Attach(Workspace& ws, const std::optional<ConnectionRef>& target,
              const BlockId& id) {
  if (!target)
    return Status::Ok();
  return ws.Connect(*target, id);
}

std::vector<Event> Placed(EditorState& state, Workspace staged,
                          const BlockId& id, bool new_stack, EventKind kind) {
  state.workspace = std::move(staged);
  state.cursor = CursorLocation::OnBlock(id);
  std::vector<Event> events;
  Event event = MakeEvent(kind);
  WithBlock(event, state.workspace, id);
  events.push_back(std::move(event));
  if (new_stack) {
    if (const Stack* stack = state.workspace.StackOf(id))
      events.push_back(
          StackEvent(EventKind::kStackCreated, state.workspace, *stack));
  }
  return events;
}

const FieldSpec* EditedField(const EditorState& state) {
  if (!state.field_edit)
    return nullptr;
  const BlockDefinition* def =
      state.workspace.DefinitionOf(state.field_edit->block);
  if (!def || state.field_edit->index >= def->fields.size())
    return nullptr;
  return &def->fields[state.field_edit->index];
}

}  // namespace

std::optional<ConnectionRef> ConnectionContext(const Workspace& ws,
                                               const CursorLocation& cursor) {
  if (cursor.kind == CursorLocation::Kind::kElement) {
    std::vector<ElementRef> children = Children(ws, cursor.block);
    if (cursor.index < children.size())
      return ConnectionOf(cursor.block, children[cursor.index]);
    return std::nullopt;
  }
  if (cursor.kind == CursorLocation::Kind::kBlock) {
    const BlockDefinition* def = ws.DefinitionOf(cursor.block);
    if (def && def->kind == BlockKind::kStatement && def->has_next)
      return ConnectionRef::Next(cursor.block);
  }
  return std::nullopt;
}

std::vector<std::string> CompatibleEntries(
    const Workspace& ws, const std::optional<ConnectionRef>& context) {
  std::vector<std::string> out;
  const BlockDefinition* target =
      context ? ws.DefinitionOf(context->block) : nullptr;
  const Block* target_block = context ? ws.FindBlock(context->block) : nullptr;
  for (const auto& def : ws.block_set().definitions()) {
    bool fits = true;
    if (context) {
      const bool statement = def.kind == BlockKind::kStatement;
      fits = false;
      if (target && target_block) {
        switch (context->kind) {
          case LinkKind::kNext:
            fits = target->kind == BlockKind::kStatement && target->has_next &&
                   statement && def.has_previous;
            break;
          case LinkKind::kPrevious:
            fits = target->kind == BlockKind::kStatement &&
                   target->has_previous && statement && def.has_next;
            break;
          case LinkKind::kStatementSlot:
            fits = target->FindStatementInput(context->input) != nullptr &&
                   statement && def.has_previous;
            break;
          case LinkKind::kValueSlot: {
            const ValueInputSpec* input =
                target->FindValueInput(context->input);
            auto slot = target_block->value_slots.find(context->input);
            bool empty =
                slot == target_block->value_slots.end() || !slot->second;
            fits = input && empty && !statement && def.value_output &&
                   Compatible(*def.value_output, input->accepted);
            break;
          }
        }
      }
    }
    if (fits)
      out.push_back(def.def_id);
  }
  return out;
}

std::string DescribeConnection(const Workspace& ws, const ConnectionRef& ref) {
  std::string owner = DescribeBlockParts(ws, ref.block).phrase_full;
  switch (ref.kind) {
    case LinkKind::kNext:
      return "after " + owner;
    case LinkKind::kPrevious:
      return "before " + owner;
    case LinkKind::kValueSlot:
    case LinkKind::kStatementSlot:
      if (auto index = ElementIndexOfInput(ws, ref.block, ref.input))
        return ElementName(ws, ref.block, *index) + " of " + owner;
      return ref.input + " of " + owner;
  }
  return owner;
}

std::vector<Event> ToggleMode(EditorState& state) {
  if (state.mode == Mode::kEdit) {
    state.mode = Mode::kNavigation;
    return {MakeEvent(EventKind::kModeNavigation)};
  }
  const Workspace& ws = state.workspace;
  Event event = MakeEvent(EventKind::kModeEdit);
  switch (state.cursor.kind) {
    case CursorLocation::Kind::kBlock: {
      BlockDescription d = DescribeBlockParts(ws, state.cursor.block);
      event.Set("target", d.phrase_full);
      event.Set("target_where", d.where);
      break;
    }
    case CursorLocation::Kind::kElement: {
      event.Set("target",
                DescribeElement(ws, state.cursor.block, state.cursor.index));
      event.Set("target_where",
                DescribeBlockParts(ws, state.cursor.block).where);
      break;
    }
    default:
      return Fail("enter edit mode", ErrorCode::kNoSelection,
                  "select a block or connection first");
  }
  state.mode = Mode::kEdit;
  return {event};
}

std::vector<Event> Copy(EditorState& state) {
  const BlockId* id = SelectedBlock(state);
  if (!id)
    return Fail("copy", ErrorCode::kNoSelection, "no block selected");
  state.clipboard =
      Clipboard{SubtreeToJson(state.workspace, *id), ClipOrigin::kCopy, 0};
  Event event = MakeEvent(EventKind::kCopied);
  WithBlock(event, state.workspace, *id);
  return {event};
}

std::vector<Event> Cut(EditorState& state) {
  const BlockId* selected = SelectedBlock(state);
  if (!selected)
    return Fail("cut", ErrorCode::kNoSelection, "no block selected");
  BlockId id = *selected;
  Workspace staged = state.workspace;
  Status removed = staged.DeleteBlock(id);
  if (!removed.ok())
    return Fail("cut", removed.error());
  Event event = MakeEvent(EventKind::kCut);
  WithBlock(event, state.workspace, id);
  event.Set("origin", event.vars["where"]);
  state.clipboard =
      Clipboard{SubtreeToJson(state.workspace, id), ClipOrigin::kCut, 0};
  state.cursor = LandingAfterRemoval(state.workspace, id);
  std::vector<Event> events{event};
  NoteRetired(state.workspace, staged, events);
  state.workspace = std::move(staged);
  return events;
}

std::vector<Event> PasteAt(EditorState& state,
                           const std::optional<ConnectionRef>& target,
                           Position position) {
  if (state.mode != Mode::kEdit)
    return Fail("paste", ErrorCode::kNotInEditMode,
                "switch to edit mode to paste");
  if (!state.clipboard)
    return Fail("paste", ErrorCode::kEmptyClipboard, "clipboard is empty");
  Clipboard& clip = *state.clipboard;
  bool fresh = clip.origin == ClipOrigin::kCopy || clip.paste_count > 0;
  Workspace staged = state.workspace;
  auto id = InstantiateSubtree(staged, clip.content, position, fresh);
  if (!id.ok())
    return Fail("paste", id.error());
  Status attached = Attach(staged, target, *id);
  if (!attached.ok())
    return Fail("paste", attached.error());
  ++clip.paste_count;
  return Placed(state, std::move(staged), *id, !target, EventKind::kPasted);
}

std::vector<Event> Paste(EditorState& state) {
  return PasteAt(state, ConnectionContext(state.workspace, state.cursor),
                 NewStackPosition(state.workspace, state.cursor));
}

std::vector<Event> Delete(EditorState& state) {
  const BlockId* selected = SelectedBlock(state);
  if (!selected)
    return Fail("delete", ErrorCode::kNoSelection, "no block selected");
  BlockId id = *selected;
  Workspace staged = state.workspace;
  Status removed = staged.DeleteBlock(id);
  if (!removed.ok())
    return Fail("delete", removed.error());
  Event event = MakeEvent(EventKind::kDeleted);
  WithBlock(event, state.workspace, id);
  event.Set("origin", event.vars["where"]);
  state.cursor = LandingAfterRemoval(state.workspace, id);
  std::vector<Event> events{event};
  NoteRetired(state.workspace, staged, events);
  state.workspace = std::move(staged);
  return events;
}

std::vector<Event> Disconnect(EditorState& state) {
  if (state.mode != Mode::kEdit)
    return Fail("disconnect", ErrorCode::kNotInEditMode,
                "switch to edit mode to disconnect");
  std::optional<BlockId> id;
  if (const BlockId* selected = SelectedBlock(state)) {
    id = *selected;
  } else if (state.cursor.kind == CursorLocation::Kind::kElement) {
    std::vector<ElementRef> children =
        Children(state.workspace, state.cursor.block);
    if (state.cursor.index < children.size())
      id = children[state.cursor.index].attached;
    if (!id)
      return Fail("disconnect", ErrorCode::kNoSelection,
                  "nothing is connected here");
  } else {
    return Fail("disconnect", ErrorCode::kNoSelection, "no block selected");
  }
  if (state.workspace.IsStackTop(*id))
    return Fail("disconnect", ErrorCode::kAlreadyDetached,
                "block already starts its own stack");
  Workspace staged = state.workspace;
  auto detached = staged.Detach(*id, false);
  if (!detached.ok())
    return Fail("disconnect", detached.error());
  return Placed(state, std::move(staged), *detached, true,
                EventKind::kDisconnected);
}

std::vector<Event> ToggleComment(EditorState& state, std::string_view text) {
  if (state.mode != Mode::kEdit)
    return Fail("comment", ErrorCode::kNotInEditMode,
                "switch to edit mode to comment");
  const BlockId* id = SelectedBlock(state);
  if (!id)
    return Fail("comment", ErrorCode::kNoSelection, "no block selected");
  const Block* block = state.workspace.FindBlock(*id);
  Comment next{std::string(text), true};
  EventKind kind = EventKind::kCommentAdded;
  if (block->comment) {
    next = *block->comment;
    next.visible = !next.visible;
    kind = next.visible ? EventKind::kCommentShown : EventKind::kCommentHidden;
  }
  Status status = state.workspace.SetComment(*id, next);
  if (!status.ok())
    return Fail("comment", status.error());
  Event event = MakeEvent(kind);
  event.Set("text", next.text.empty() ? "empty" : next.text);
  return {event};
}

std::vector<Event> RenameStack(EditorState& state, std::string_view name) {
  const Stack* stack = nullptr;
  switch (state.cursor.kind) {
    case CursorLocation::Kind::kStackHead:
      stack = state.workspace.FindStack(state.cursor.label);
      break;
    case CursorLocation::Kind::kBlock:
    case CursorLocation::Kind::kElement:
      stack = state.workspace.StackOf(state.cursor.block);
      break;
    default:
      break;
  }
  if (!stack)
    return Fail("rename stack", ErrorCode::kNoSelection, "no stack selected");
  std::string label = stack->label;
  Status status = SetCustomName(state.workspace, label, name);
  if (!status.ok())
    return Fail("rename stack", status.error());
  Event event = MakeEvent(EventKind::kStackRenamed);
  event.Set("label", label);
  event.Set("name", *state.workspace.FindStack(label)->custom_name);
  return {event};
}

std::vector<Event> OpenToolbox(EditorState& state) {
  if (state.toolbox.open)
    return Fail("open toolbox", ErrorCode::kToolboxOpen,
                "toolbox is already open");
  std::optional<ConnectionRef> context;
  if (state.mode == Mode::kEdit)
    context = ConnectionContext(state.workspace, state.cursor);
  std::vector<std::string> entries =
      CompatibleEntries(state.workspace, context);
  ToolboxView view;
  for (const auto& category : state.categories) {
    ToolboxCategory shown{category.name, {}};
    for (const auto& def_id : category.def_ids) {
      if (std::find(entries.begin(), entries.end(), def_id) != entries.end())
        shown.def_ids.push_back(def_id);
    }
    if (!shown.def_ids.empty())
      view.categories.push_back(std::move(shown));
  }
  if (view.categories.empty()) {
    return Fail("open toolbox", ErrorCode::kToolboxEmptyForContext,
                "no blocks fit " +
                    (context ? DescribeConnection(state.workspace, *context)
                             : std::string("here")));
  }
  state.toolbox.open = true;
  state.toolbox.filtered_entries = std::move(entries);
  state.toolbox.view = std::move(view);
  state.toolbox.saved_cursor = state.cursor;
  state.toolbox.context = context;
  state.cursor = CursorLocation::ToolboxEntry(0, 0);

  Event first = DescribeLocation(state.workspace, state.cursor,
                                 &state.toolbox.view);
  Event opened = MakeEvent(EventKind::kToolboxOpened);
  opened.Set("count", Plural(state.toolbox.view.entry_count(), "block",
                             "blocks"));
  opened.Set("entry", first.vars["entry"]);
  opened.Set("category", first.vars["category"]);
  std::vector<Event> events{opened};
  if (context) {
    Event filtered = MakeEvent(EventKind::kToolboxFiltered);
    filtered.Set("count", std::to_string(state.toolbox.view.entry_count()));
    filtered.Set("context", DescribeConnection(state.workspace, *context));
    events.push_back(std::move(filtered));
  }
  return events;
}

std::vector<Event> CloseToolbox(EditorState& state) {
  if (!state.toolbox.open)
    return Fail("close toolbox", ErrorCode::kToolboxNotOpen,
                "toolbox is not open");
  state.cursor = state.toolbox.saved_cursor;
  state.toolbox = ToolboxState{};
  Event event = MakeEvent(EventKind::kToolboxClosed);
  event.Set("target", ShortTarget(state.workspace, state.cursor));
  return {event};
}

std::vector<Event> Insert(EditorState& state) {
  if (!state.toolbox.open)
    return Fail("insert", ErrorCode::kToolboxNotOpen, "toolbox is not open");
  const CursorLocation& at = state.cursor;
  const auto& categories = state.toolbox.view.categories;
  if (at.kind != CursorLocation::Kind::kToolboxEntry ||
      at.category >= categories.size() ||
      at.entry >= categories[at.category].def_ids.size())
    return Fail("insert", ErrorCode::kUnknownDefinition, "no entry selected");
  return InsertDefinition(state, categories[at.category].def_ids[at.entry]);
}

std::vector<Event> InsertDefinition(EditorState& state,
                                    std::string_view def_id) {
  if (!state.toolbox.open)
    return Fail("insert", ErrorCode::kToolboxNotOpen, "toolbox is not open");
  const auto& entries = state.toolbox.filtered_entries;
  if (std::find(entries.begin(), entries.end(), def_id) == entries.end())
    return Fail("insert", ErrorCode::kUnknownDefinition,
                std::string(def_id) + " is not offered here");
  const CursorLocation origin = state.toolbox.saved_cursor;
  const std::optional<ConnectionRef> context = state.toolbox.context;
  if (state.mode != Mode::kEdit &&
      origin.kind != CursorLocation::Kind::kWorkspacePoint)
    return Fail("insert", ErrorCode::kNotInEditMode,
                "switch to edit mode to insert here");
  Workspace staged = state.workspace;
  auto id = staged.NewBlock(def_id, {}, NewStackPosition(staged, origin));
  if (!id.ok())
    return Fail("insert", id.error());
  Status attached = Attach(staged, context, *id);
  if (!attached.ok())
    return Fail("insert", attached.error());
  state.toolbox = ToolboxState{};
  return Placed(state, std::move(staged), *id, !context, EventKind::kInserted);
}

std::vector<Event> StartFieldEdit(EditorState& state) {
  if (state.mode != Mode::kEdit)
    return Fail("edit field", ErrorCode::kNotInEditMode,
                "switch to edit mode to change a field");
  const CursorLocation& at = state.cursor;
  const BlockDefinition* def =
      at.is_element() ? state.workspace.DefinitionOf(at.block) : nullptr;
  if (!def || at.index >= def->fields.size())
    return Fail("edit field", ErrorCode::kNoSelection, "no field selected");
  state.field_edit = FieldEdit{at.block, at.index, {}};
  const Block* block = state.workspace.FindBlock(at.block);
  Event event = MakeEvent(EventKind::kFieldEditStarted);
  event.Set("field", ElementName(state.workspace, at.block, at.index));
  std::string value =
      FieldValueText(block->field_values.at(def->fields[at.index].name));
  event.Set("value", value.empty() ? "empty" : value);
  return {event};
}

std::vector<Event> FieldType(EditorState& state, std::string_view text) {
  if (!state.field_edit)
    return Fail("type", ErrorCode::kNoSelection, "no field is being edited");
  state.field_edit->buffer += text;
  Event event = MakeEvent(EventKind::kFieldInput);
  event.Set("char", text == " " ? std::string("space") : std::string(text));
  return {event};
}

std::vector<Event> FieldBackspace(EditorState& state) {
  if (!state.field_edit)
    return Fail("erase", ErrorCode::kNoSelection, "no field is being edited");
  std::string& buffer = state.field_edit->buffer;
  Event event = MakeEvent(EventKind::kFieldInput);
  if (buffer.empty()) {
    event.Set("char", "nothing to erase");
  } else {
    std::string erased(1, buffer.back());
    buffer.pop_back();
    event.Set("char", "erased " + (erased == " " ? "space" : erased));
  }
  return {event};
}

std::vector<Event> FieldCommit(EditorState& state) {
  const FieldSpec* spec = EditedField(state);
  if (!spec) {
    state.field_edit.reset();
    return Fail("save field", ErrorCode::kNoSelection,
                "no field is being edited");
  }
  FieldEdit edit = *state.field_edit;
  if (!edit.buffer.empty()) {
    auto value = ParseFieldValue(*spec, edit.buffer);
    if (!value.ok())
      return Fail("save field", value.error());
    Status status = state.workspace.SetField(edit.block, spec->name, *value);
    if (!status.ok())
      return Fail("save field", status.error());
  }
  state.field_edit.reset();
  const Block* block = state.workspace.FindBlock(edit.block);
  Event event = MakeEvent(EventKind::kFieldCommitted);
  WithBlock(event, state.workspace, edit.block);
  event.Set("field", ElementName(state.workspace, edit.block, edit.index));
  std::string value = FieldValueText(block->field_values.at(spec->name));
  event.Set("value", value.empty() ? "empty" : value);
  return {event};
}

std::vector<Event> FieldCancel(EditorState& state) {
  if (!state.field_edit)
    return Fail("cancel", ErrorCode::kNoSelection, "no field is being edited");
  Event event = MakeEvent(EventKind::kFieldCancelled);
  event.Set("field", ElementName(state.workspace, state.field_edit->block,
                                 state.field_edit->index));
  state.field_edit.reset();
  return {event};
}

}  // namespace eaf
