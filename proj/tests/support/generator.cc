#include "generator.h"

#include <algorithm>
#include <random>

#include "eaf/labeling.h"

namespace eaf::testing {

namespace {

class Generator {
 public:
  Generator(uint64_t seed, const GenOptions& options)
      : rng_(seed), options_(options) {
    for (const auto& def : ws_.block_set().definitions()) {
      if (def.kind == BlockKind::kStatement)
        statements_.push_back(&def);
      else
        values_.push_back(&def);
    }
  }

  Workspace Build() {
    int stacks = Uniform(options_.min_stacks, options_.max_stacks);
    budget_ = options_.max_blocks;
    for (int i = 0; i < stacks && budget_ > 0; ++i) {
      // Reserve one block for every stack still to come.
      int reserve = stacks - i - 1;
      BlockId top;
      if (Chance(0.12)) {
        top = *MakeValue(ValueType::kAny, 1, reserve);
      } else {
        top = *MakeChain(1, reserve);
      }
      Stack stack;
      stack.label = LabelForIndex(static_cast<size_t>(i));
      stack.position = Position{static_cast<double>(20 + 220 * i),
                                static_cast<double>(Uniform(0, 8) * 20)};
      if (Chance(0.2))
        stack.custom_name = "routine " + std::to_string(i + 1);
      stack.top = top;
      ws_.mutable_stacks().push_back(std::move(stack));
    }
    ws_.Reindex();
    return ws_;
  }

 private:
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& Pick(const std::vector<T>& items) {
    return items[static_cast<size_t>(Uniform(0, static_cast<int>(items.size()) - 1))];
  }

  Block& NewBlock(const BlockDefinition& def) {
    --budget_;
    Block block;
    block.id = "b" + std::to_string(++serial_);
    block.def_id = def.def_id;
    for (const auto& spec : def.fields) {
      switch (spec.kind) {
        case FieldKind::kNumber:
          block.field_values[spec.name] =
              Chance(0.15) ? 2.5 : static_cast<double>(Uniform(0, 12));
          break;
        case FieldKind::kText:
          if (spec.name == "VAR")
            block.field_values[spec.name] =
                Pick(std::vector<std::string>{"x", "y", "count"});
          else
            block.field_values[spec.name] =
                Pick(std::vector<std::string>{"hi", "bye", "", "done"});
          break;
        case FieldKind::kChoice:
          block.field_values[spec.name] = Pick(spec.options);
          break;
      }
    }
    for (const auto& input : def.value_inputs)
      block.value_slots[input.name] = std::nullopt;
    for (const auto& input : def.statement_inputs)
      block.statement_slots[input.name] = std::nullopt;
    if (Chance(0.1))
      block.comment = Comment{"note " + block.id, Chance(0.7)};
    BlockId id = block.id;
    return ws_.mutable_blocks()[id] = std::move(block);
  }

  std::optional<BlockId> MakeValue(ValueType accepted, int depth,
                                   int reserve = 0) {
    if (budget_ - reserve <= 0)
      return std::nullopt;
    std::vector<const BlockDefinition*> fits;
    for (const auto* def : values_) {
      if (Compatible(*def->value_output, accepted) &&
          (depth < options_.max_depth || def->value_inputs.empty()))
        fits.push_back(def);
    }
    if (fits.empty())
      return std::nullopt;
    const BlockDefinition& def = *Pick(fits);
    BlockId id = NewBlock(def).id;
    FillInputs(def, id, depth, reserve);
    return id;
  }

  std::optional<BlockId> MakeChain(int depth, int reserve) {
    if (budget_ - reserve <= 0)
      return std::nullopt;
    int length = Uniform(1, depth == 1 ? 4 : 3);
    std::optional<BlockId> head;
    BlockId last;
    for (int i = 0; i < length && budget_ - reserve > 0; ++i) {
      std::vector<const BlockDefinition*> fits;
      for (const auto* def : statements_) {
        if (depth < options_.max_depth || def->statement_inputs.empty())
          fits.push_back(def);
      }
      const BlockDefinition& def = *Pick(fits);
      BlockId id = NewBlock(def).id;
      if (head)
        ws_.mutable_blocks()[last].next = id;
      else
        head = id;
      last = id;
      FillInputs(def, id, depth, reserve);
    }
    return head;
  }

  void FillInputs(const BlockDefinition& def, const BlockId& id, int depth,
                  int reserve = 0) {
    if (depth >= options_.max_depth)
      return;
    for (const auto& input : def.value_inputs) {
      if (Chance(options_.empty_chance) || budget_ - reserve <= 0)
        continue;
      auto child = MakeValue(input.accepted, depth + 1, reserve);
      ws_.mutable_blocks()[id].value_slots[input.name] = child;
    }
    for (const auto& input : def.statement_inputs) {
      if (Chance(options_.empty_chance + 0.1) || budget_ - reserve <= 0)
        continue;
      auto child = MakeChain(depth + 1, reserve);
      ws_.mutable_blocks()[id].statement_slots[input.name] = child;
    }
  }

  std::mt19937_64 rng_;
  GenOptions options_;
  Workspace ws_;
  std::vector<const BlockDefinition*> statements_;
  std::vector<const BlockDefinition*> values_;
  int budget_ = 0;
  int serial_ = 0;
};

int DepthOf(const Workspace& ws, const BlockId& id, int depth) {
  int best = depth;
  const Block& block = *ws.FindBlock(id);
  auto visit_chain = [&](std::optional<BlockId> c) {
    while (c) {
      best = std::max(best, DepthOf(ws, *c, depth + 1));
      c = ws.FindBlock(*c)->next;
    }
  };
  for (const auto& [name, slot] : block.value_slots) visit_chain(slot);
  for (const auto& [name, slot] : block.statement_slots) visit_chain(slot);
  return best;
}

}  // namespace

Workspace GenerateWorkspace(uint64_t seed, const GenOptions& options) {
  return Generator(seed, options).Build();
}

int MaxDepth(const Workspace& ws) {
  int best = 0;
  for (const auto& stack : ws.stacks()) {
    std::optional<BlockId> c = stack.top;
    while (c) {
      best = std::max(best, DepthOf(ws, *c, 1));
      c = ws.FindBlock(*c)->next;
    }
  }
  return best;
}

std::set<CursorLocation> EnumerateLocations(const Workspace& ws) {
  std::set<CursorLocation> out;
  out.insert(CursorLocation::WorkspacePoint({0, 0}));
  for (const auto& stack : ws.stacks()) {
    out.insert(CursorLocation::WorkspacePoint(stack.position));
    out.insert(CursorLocation::StackHead(stack.label));
  }
  for (const auto& [id, block] : ws.blocks()) {
    out.insert(CursorLocation::OnBlock(id));
    const BlockDefinition* def = ws.block_set().Find(block.def_id);
    size_t n = def->fields.size() + def->value_inputs.size() +
               def->statement_inputs.size();
    for (size_t i = 0; i < n; ++i) out.insert(CursorLocation::Element(id, i));
  }
  return out;
}

std::vector<ConnectionRef> EnumerateConnections(const Workspace& ws) {
  std::vector<ConnectionRef> out;
  for (const auto& [id, block] : ws.blocks()) {
    const BlockDefinition* def = ws.block_set().Find(block.def_id);
    if (def->kind == BlockKind::kStatement) {
      out.push_back(ConnectionRef::Next(id));
      out.push_back(ConnectionRef::Previous(id));
    }
    for (const auto& input : def->value_inputs)
      out.push_back(ConnectionRef::ValueSlot(id, input.name));
    for (const auto& input : def->statement_inputs)
      out.push_back(ConnectionRef::StatementSlot(id, input.name));
  }
  return out;
}

std::vector<std::string> BruteForceCompatible(const Workspace& ws,
                                              const ConnectionRef& at) {
  std::vector<std::string> out;
  for (const auto& def : ws.block_set().definitions()) {
    Workspace copy = ws;
    auto id = copy.NewBlock(def.def_id);
    if (id.ok() && copy.Connect(at, *id).ok())
      out.push_back(def.def_id);
  }
  return out;
}

}  // namespace eaf::testing
