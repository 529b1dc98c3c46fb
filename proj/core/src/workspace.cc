#include "eaf/workspace.h"

#include <algorithm>
#include <functional>
#include <set>

#include "eaf/labeling.h"

namespace eaf {

namespace {

constexpr double kDetachOffset = 40;

}  // namespace

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownDefinition: return "UnknownDefinition";
    case ViolationKind::kFieldMismatch: return "FieldMismatch";
    case ViolationKind::kUnknownInput: return "UnknownInput";
    case ViolationKind::kDanglingReference: return "DanglingReference";
    case ViolationKind::kSharedChild: return "SharedChild";
    case ViolationKind::kKindMismatch: return "KindMismatch";
    case ViolationKind::kTypeMismatch: return "TypeMismatch";
    case ViolationKind::kOrphan: return "Orphan";
    case ViolationKind::kTopHasParent: return "TopHasParent";
    case ViolationKind::kMissingTop: return "MissingTop";
    case ViolationKind::kDuplicateLabel: return "DuplicateLabel";
    case ViolationKind::kBadLabel: return "BadLabel";
    case ViolationKind::kUnsortedStacks: return "UnsortedStacks";
    case ViolationKind::kBadCustomName: return "BadCustomName";
  }
  return "Unknown";
}

Workspace::Workspace(const BlockSet* block_set) : block_set_(block_set) {}

const Block* Workspace::FindBlock(std::string_view id) const {
  auto it = blocks_.find(std::string(id));
  return it == blocks_.end() ? nullptr : &it->second;
}

Block* Workspace::MutableBlock(std::string_view id) {
  auto it = blocks_.find(std::string(id));
  return it == blocks_.end() ? nullptr : &it->second;
}

const BlockDefinition* Workspace::DefinitionOf(std::string_view id) const {
  const Block* block = FindBlock(id);
  return block ? block_set_->Find(block->def_id) : nullptr;
}

const Stack* Workspace::FindStack(std::string_view label) const {
  for (const auto& stack : stacks_) {
    if (stack.label == label)
      return &stack;
  }
  return nullptr;
}

Stack* Workspace::MutableStackByTop(std::string_view top) {
  for (auto& stack : stacks_) {
    if (stack.top == top)
      return &stack;
  }
  return nullptr;
}

const Stack* Workspace::StackOf(std::string_view id) const {
  auto it = stack_of_.find(std::string(id));
  return it == stack_of_.end() ? nullptr : FindStack(it->second);
}

std::optional<ParentLink> Workspace::ParentOf(std::string_view id) const {
  auto it = parents_.find(std::string(id));
  if (it == parents_.end())
    return std::nullopt;
  return it->second;
}

bool Workspace::IsStackTop(std::string_view id) const {
  for (const auto& stack : stacks_) {
    if (stack.top == id)
      return true;
  }
  return false;
}

BlockId Workspace::ChainTail(const BlockId& id) const {
  BlockId current = id;
  std::set<BlockId> seen;
  while (true) {
    const Block* block = FindBlock(current);
    if (!block || !block->next || !seen.insert(current).second)
      return current;
    current = *block->next;
  }
}

std::optional<BlockId> Workspace::Predecessor(std::string_view id) const {
  auto link = ParentOf(id);
  if (link && link->kind == LinkKind::kNext)
    return link->parent;
  return std::nullopt;
}

std::optional<BlockId> Workspace::Successor(std::string_view id) const {
  const Block* block = FindBlock(id);
  return block ? block->next : std::nullopt;
}

std::vector<BlockId> Workspace::Subtree(const BlockId& id) const {
  std::vector<BlockId> out;
  std::set<BlockId> seen;
  // Visits |root| and its nested children; |follow_next| walks the chain.
  std::function<void(const BlockId&, bool)> visit =
      [&](const BlockId& root, bool follow_next) {
        std::optional<BlockId> current = root;
        while (current) {
          const Block* block = FindBlock(*current);
          if (!block || !seen.insert(*current).second)
            return;
          out.push_back(*current);
          const BlockDefinition* def = block_set_->Find(block->def_id);
          if (def) {
            for (const auto& input : def->value_inputs) {
              auto it = block->value_slots.find(input.name);
              if (it != block->value_slots.end() && it->second)
                visit(*it->second, true);
            }
            for (const auto& input : def->statement_inputs) {
              auto it = block->statement_slots.find(input.name);
              if (it != block->statement_slots.end() && it->second)
                visit(*it->second, true);
            }
          }
          if (!follow_next)
            return;
          current = block->next;
        }
      };
  visit(id, false);
  return out;
}

BlockId Workspace::NextBlockId() {
  while (blocks_.count("b" + std::to_string(next_serial_)))
    ++next_serial_;
  return "b" + std::to_string(next_serial_++);
}

Result<BlockId> Workspace::NewBlock(
    std::string_view def_id, const std::map<std::string, FieldValue>& fields,
    Position position) {
  const BlockDefinition* def = block_set_->Find(def_id);
  if (!def) {
    return MakeError(ErrorCode::kUnknownDefinition,
                     "no block type " + std::string(def_id));
  }
  for (const auto& [name, value] : fields) {
    if (!def->FindField(name))
      return MakeError(ErrorCode::kBadFieldValue, name);
  }
  Block block;
  block.def_id = def->def_id;
  for (const auto& spec : def->fields) {
    auto it = fields.find(spec.name);
    FieldValue value = it == fields.end() ? spec.default_value : it->second;
    Status status = CheckFieldValue(spec, value);
    if (!status.ok())
      return status.error();
    block.field_values[spec.name] = std::move(value);
  }
  for (const auto& input : def->value_inputs)
    block.value_slots[input.name] = std::nullopt;
  for (const auto& input : def->statement_inputs)
    block.statement_slots[input.name] = std::nullopt;
  block.id = NextBlockId();
  BlockId id = block.id;
  blocks_.emplace(id, std::move(block));
  stacks_.push_back(Stack{AssignLabel(*this), std::nullopt, position, id});
  SortStacks();
  Reindex();
  return id;
}

Status Workspace::Connect(const ConnectionRef& at, const BlockId& block_id) {
  Block* block = MutableBlock(block_id);
  if (!block)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + block_id);
  Block* target = MutableBlock(at.block);
  if (!target)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + at.block);
  if (!IsStackTop(block_id)) {
    return MakeError(ErrorCode::kIncompatibleConnection,
                     "block is still connected");
  }
  const BlockDefinition* def = block_set_->Find(block->def_id);
  const BlockDefinition* target_def = block_set_->Find(target->def_id);
  if (!def || !target_def)
    return MakeError(ErrorCode::kUnknownDefinition, block->def_id);

  // A connection inside the moving tree would close a loop.
  {
    std::optional<BlockId> cursor = block_id;
    std::set<BlockId> members;
    while (cursor) {
      for (const auto& id : Subtree(*cursor)) members.insert(id);
      const Block* b = FindBlock(*cursor);
      cursor = b ? b->next : std::nullopt;
    }
    if (members.count(at.block))
      return MakeError(ErrorCode::kWouldCreateCycle,
                       "cannot connect a block inside itself");
  }

  const bool is_statement = def->kind == BlockKind::kStatement;
  auto incompatible = [&](std::string what) {
    return MakeError(ErrorCode::kIncompatibleConnection,
                     def->label + " block does not fit " + what);
  };

  BlockId tail = ChainTail(block_id);
  switch (at.kind) {
    case LinkKind::kNext: {
      if (target_def->kind != BlockKind::kStatement || !target_def->has_next)
        return incompatible("a value block");
      if (!is_statement || !def->has_previous)
        return incompatible("statement connection");
      std::optional<BlockId> old_next = target->next;
      target->next = block_id;
      MutableBlock(tail)->next = old_next;
      break;
    }
    case LinkKind::kPrevious: {
      if (target_def->kind != BlockKind::kStatement ||
          !target_def->has_previous)
        return incompatible("a value block");
      if (!is_statement || !def->has_next)
        return incompatible("statement connection");
      auto link = ParentOf(at.block);
      if (!link) {
        // The receiving stack keeps its label; retire the mover's.
        std::string target_label;
        if (const Stack* target_stack = StackOf(at.block))
          target_label = target_stack->label;
        MutableBlock(tail)->next = at.block;
        stacks_.erase(std::remove_if(stacks_.begin(), stacks_.end(),
                                     [&](const Stack& s) {
                                       return s.top == block_id;
                                     }),
                      stacks_.end());
        for (auto& stack : stacks_) {
          if (stack.label == target_label)
            stack.top = block_id;
        }
        Reindex();
        return Status::Ok();
      }
      Block* parent = MutableBlock(link->parent);
      if (link->kind == LinkKind::kNext) {
        parent->next = block_id;
      } else {
        parent->statement_slots[link->input] = block_id;
      }
      MutableBlock(tail)->next = at.block;
      break;
    }
    case LinkKind::kValueSlot: {
      const ValueInputSpec* input = target_def->FindValueInput(at.input);
      if (!input) {
        return MakeError(ErrorCode::kIncompatibleConnection,
                         "no input " + at.input);
      }
      if (is_statement)
        return incompatible(input->display + " input");
      if (!Compatible(*def->value_output, input->accepted)) {
        return incompatible(std::string(ValueTypeName(input->accepted)) +
                            " input " + input->display);
      }
      auto& slot = target->value_slots[at.input];
      if (slot) {
        return MakeError(ErrorCode::kOccupiedValueSlot,
                         input->display + " input is already filled");
      }
      slot = block_id;
      break;
    }
    case LinkKind::kStatementSlot: {
      const StatementInputSpec* input =
          target_def->FindStatementInput(at.input);
      if (!input) {
        return MakeError(ErrorCode::kIncompatibleConnection,
                         "no input " + at.input);
      }
      if (!is_statement || !def->has_previous)
        return incompatible("statement connection");
      auto& slot = target->statement_slots[at.input];
      std::optional<BlockId> old_head = slot;
      slot = block_id;
      MutableBlock(tail)->next = old_head;
      break;
    }
  }
  stacks_.erase(std::remove_if(stacks_.begin(), stacks_.end(),
                               [&](const Stack& s) { return s.top == block_id; }),
                stacks_.end());
  Reindex();
  return Status::Ok();
}

Result<BlockId> Workspace::Detach(const BlockId& block_id, bool heal) {
  Block* block = MutableBlock(block_id);
  if (!block)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + block_id);
  auto link = ParentOf(block_id);
  if (!link)
    return block_id;
  const Stack* source = StackOf(block_id);
  Position position = source ? source->position : Position{};
  position.x += kDetachOffset;
  position.y += kDetachOffset;

  Block* parent = MutableBlock(link->parent);
  std::optional<BlockId> successor = heal ? block->next : std::nullopt;
  switch (link->kind) {
    case LinkKind::kNext:
      parent->next = successor;
      break;
    case LinkKind::kValueSlot:
      parent->value_slots[link->input] = std::nullopt;
      break;
    case LinkKind::kStatementSlot:
      parent->statement_slots[link->input] = successor;
      break;
    case LinkKind::kPrevious:
      break;
  }
  if (heal)
    block->next = std::nullopt;
  stacks_.push_back(Stack{AssignLabel(*this), std::nullopt, position, block_id});
  SortStacks();
  Reindex();
  return block_id;
}

Status Workspace::RemoveStack(const BlockId& top) {
  if (!IsStackTop(top))
    return MakeError(ErrorCode::kUnknownStack, top + " is not a stack top");
  std::optional<BlockId> cursor = top;
  std::vector<BlockId> doomed;
  while (cursor) {
    for (const auto& id : Subtree(*cursor)) doomed.push_back(id);
    const Block* b = FindBlock(*cursor);
    cursor = b ? b->next : std::nullopt;
  }
  for (const auto& id : doomed) blocks_.erase(id);
  stacks_.erase(std::remove_if(stacks_.begin(), stacks_.end(),
                               [&](const Stack& s) { return s.top == top; }),
                stacks_.end());
  Reindex();
  return Status::Ok();
}

Status Workspace::DeleteBlock(const BlockId& block_id) {
  Block* block = MutableBlock(block_id);
  if (!block)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + block_id);
  if (IsStackTop(block_id)) {
    if (block->next) {
      BlockId successor = *block->next;
      block->next = std::nullopt;
      for (const auto& id : Subtree(block_id)) blocks_.erase(id);
      MutableStackByTop(block_id)->top = successor;
      Reindex();
      return Status::Ok();
    }
    return RemoveStack(block_id);
  }
  auto detached = Detach(block_id, /*heal=*/true);
  if (!detached.ok())
    return detached.error();
  return RemoveStack(*detached);
}

Status Workspace::SetField(const BlockId& block_id, std::string_view name,
                           FieldValue value) {
  Block* block = MutableBlock(block_id);
  if (!block)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + block_id);
  const BlockDefinition* def = block_set_->Find(block->def_id);
  const FieldSpec* spec = def ? def->FindField(name) : nullptr;
  if (!spec)
    return MakeError(ErrorCode::kBadFieldValue, std::string(name));
  Status status = CheckFieldValue(*spec, value);
  if (!status.ok())
    return status;
  block->field_values[spec->name] = std::move(value);
  return Status::Ok();
}

Status Workspace::SetComment(const BlockId& block_id,
                             std::optional<Comment> comment) {
  Block* block = MutableBlock(block_id);
  if (!block)
    return MakeError(ErrorCode::kUnknownBlock, "no block " + block_id);
  block->comment = std::move(comment);
  return Status::Ok();
}

Status Workspace::SetCustomName(std::string_view label, std::string name) {
  for (auto& stack : stacks_) {
    if (stack.label == label) {
      stack.custom_name = std::move(name);
      return Status::Ok();
    }
  }
  return MakeError(ErrorCode::kUnknownStack, "no stack " + std::string(label));
}

void Workspace::SortStacks() {
  std::stable_sort(stacks_.begin(), stacks_.end(),
                   [](const Stack& a, const Stack& b) {
                     return LabelLess(a.label, b.label);
                   });
}

void Workspace::Reindex() {
  parents_.clear();
  stack_of_.clear();
  for (const auto& [id, block] : blocks_) {
    auto note = [&](const std::optional<BlockId>& child, LinkKind kind,
                    const std::string& input) {
      if (child)
        parents_.emplace(*child, ParentLink{id, kind, input});
    };
    note(block.next, LinkKind::kNext, {});
    for (const auto& [name, child] : block.value_slots)
      note(child, LinkKind::kValueSlot, name);
    for (const auto& [name, child] : block.statement_slots)
      note(child, LinkKind::kStatementSlot, name);
  }
  for (const auto& stack : stacks_) {
    std::optional<BlockId> cursor = stack.top;
    std::set<BlockId> seen;
    while (cursor && seen.insert(*cursor).second) {
      for (const auto& id : Subtree(*cursor)) stack_of_.emplace(id, stack.label);
      const Block* b = FindBlock(*cursor);
      cursor = b ? b->next : std::nullopt;
    }
  }
  numbering_ = Renumber(*this);
  long long max_serial = 0;
  for (const auto& [id, block] : blocks_) {
    if (id.size() > 1 && id[0] == 'b' &&
        id.find_first_not_of("0123456789", 1) == std::string::npos &&
        id.size() < 18) {
      max_serial = std::max(max_serial, std::stoll(id.substr(1)));
    }
  }
  next_serial_ = std::max(next_serial_, max_serial + 1);
}

std::vector<ElementRef> Children(const Workspace& ws, std::string_view id) {
  std::vector<ElementRef> out;
  const Block* block = ws.FindBlock(id);
  const BlockDefinition* def = ws.DefinitionOf(id);
  if (!block || !def)
    return out;
  for (const auto& field : def->fields)
    out.push_back({ElementKind::kField, field.name, std::nullopt});
  for (const auto& input : def->value_inputs) {
    auto it = block->value_slots.find(input.name);
    out.push_back({ElementKind::kValueInput, input.name,
                   it == block->value_slots.end() ? std::nullopt : it->second});
  }
  for (const auto& input : def->statement_inputs) {
    auto it = block->statement_slots.find(input.name);
    out.push_back(
        {ElementKind::kStatementInput, input.name,
         it == block->statement_slots.end() ? std::nullopt : it->second});
  }
  return out;
}

std::optional<ConnectionRef> ConnectionOf(std::string_view block,
                                          const ElementRef& element) {
  switch (element.kind) {
    case ElementKind::kField:
      return std::nullopt;
    case ElementKind::kValueInput:
      return ConnectionRef::ValueSlot(std::string(block), element.name);
    case ElementKind::kStatementInput:
      return ConnectionRef::StatementSlot(std::string(block), element.name);
  }
  return std::nullopt;
}

Result<std::vector<BlockId>> Preorder(const Workspace& ws,
                                      std::string_view label) {
  const Stack* stack = ws.FindStack(label);
  if (!stack)
    return MakeError(ErrorCode::kUnknownStack, "no stack " + std::string(label));
  std::vector<BlockId> out;
  std::set<BlockId> seen;
  std::optional<BlockId> cursor = stack->top;
  while (cursor && seen.insert(*cursor).second) {
    for (const auto& id : ws.Subtree(*cursor)) {
      if (id == *cursor || seen.insert(id).second)
        out.push_back(id);
    }
    const Block* block = ws.FindBlock(*cursor);
    cursor = block ? block->next : std::nullopt;
  }
  return out;
}

std::vector<Violation> Validate(const Workspace& ws) {
  std::vector<Violation> out;
  const BlockSet& set = ws.block_set();
  std::map<BlockId, int> references;
  auto path = [](const BlockId& id, const std::string& member) {
    return "blocks." + id + "." + member;
  };

  for (const auto& [id, block] : ws.blocks()) {
    const BlockDefinition* def = set.Find(block.def_id);
    if (!def) {
      out.push_back({ViolationKind::kUnknownDefinition, id, path(id, "type")});
      continue;
    }
    bool fields_ok = block.field_values.size() == def->fields.size();
    for (const auto& spec : def->fields) {
      auto it = block.field_values.find(spec.name);
      if (it == block.field_values.end() ||
          !CheckFieldValue(spec, it->second).ok()) {
        fields_ok = false;
      }
    }
    if (!fields_ok)
      out.push_back({ViolationKind::kFieldMismatch, id, path(id, "fields")});

    auto check_child = [&](const std::optional<BlockId>& child,
                           const std::string& member, bool want_value,
                           ValueType accepted) {
      if (!child)
        return;
      ++references[*child];
      const Block* target = ws.FindBlock(*child);
      if (!target) {
        out.push_back({ViolationKind::kDanglingReference, id, path(id, member)});
        return;
      }
      const BlockDefinition* child_def = set.Find(target->def_id);
      if (!child_def)
        return;
      bool is_value = child_def->kind == BlockKind::kValue;
      if (is_value != want_value) {
        out.push_back({ViolationKind::kKindMismatch, *child, path(id, member)});
      } else if (is_value && !Compatible(*child_def->value_output, accepted)) {
        out.push_back({ViolationKind::kTypeMismatch, *child, path(id, member)});
      }
    };

    if (block.next && !def->has_next)
      out.push_back({ViolationKind::kKindMismatch, id, path(id, "next")});
    check_child(block.next, "next", false, ValueType::kAny);
    for (const auto& [name, child] : block.value_slots) {
      const ValueInputSpec* spec = def->FindValueInput(name);
      if (!spec) {
        out.push_back(
            {ViolationKind::kUnknownInput, id, path(id, "inputs." + name)});
        continue;
      }
      check_child(child, "inputs." + name, true, spec->accepted);
    }
    for (const auto& [name, child] : block.statement_slots) {
      if (!def->FindStatementInput(name)) {
        out.push_back(
            {ViolationKind::kUnknownInput, id, path(id, "inputs." + name)});
        continue;
      }
      check_child(child, "inputs." + name, false, ValueType::kAny);
    }
    if (block.value_slots.size() != def->value_inputs.size() ||
        block.statement_slots.size() != def->statement_inputs.size()) {
      out.push_back({ViolationKind::kUnknownInput, id, path(id, "inputs")});
    }
  }

  for (const auto& [id, count] : references) {
    if (count > 1)
      out.push_back({ViolationKind::kSharedChild, id, "blocks." + id});
  }

  std::set<std::string> labels;
  std::set<BlockId> reached;
  for (size_t i = 0; i < ws.stacks().size(); ++i) {
    const Stack& stack = ws.stacks()[i];
    std::string stack_path = "stacks." + stack.label;
    if (!IsValidLabel(stack.label))
      out.push_back({ViolationKind::kBadLabel, stack.label, stack_path});
    if (!labels.insert(stack.label).second)
      out.push_back({ViolationKind::kDuplicateLabel, stack.label, stack_path});
    if (i > 0 && !LabelLess(ws.stacks()[i - 1].label, stack.label) &&
        ws.stacks()[i - 1].label != stack.label) {
      out.push_back({ViolationKind::kUnsortedStacks, stack.label, stack_path});
    }
    if (stack.custom_name &&
        (stack.custom_name->empty() ||
         stack.custom_name->size() > kMaxCustomNameLength)) {
      out.push_back({ViolationKind::kBadCustomName, stack.label, stack_path});
    }
    if (!ws.FindBlock(stack.top)) {
      out.push_back({ViolationKind::kMissingTop, stack.label, stack_path});
      continue;
    }
    if (references.count(stack.top))
      out.push_back({ViolationKind::kTopHasParent, stack.top, stack_path});
    // Walk the whole tree, following next links at every level.
    std::vector<BlockId> pending = {stack.top};
    while (!pending.empty()) {
      BlockId current = pending.back();
      pending.pop_back();
      if (!reached.insert(current).second)
        continue;
      const Block* block = ws.FindBlock(current);
      if (!block)
        continue;
      if (block->next) pending.push_back(*block->next);
      for (const auto& [name, child] : block->value_slots)
        if (child) pending.push_back(*child);
      for (const auto& [name, child] : block->statement_slots)
        if (child) pending.push_back(*child);
    }
  }
  for (const auto& [id, block] : ws.blocks()) {
    if (!reached.count(id))
      out.push_back({ViolationKind::kOrphan, id, "blocks." + id});
  }
  return out;
}

}  // namespace eaf
