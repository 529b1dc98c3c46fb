#include "eaf/workspace.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "generator.h"
#include "outline.h"

namespace eaf {
namespace {

using testing::Outline;

std::vector<std::string> Labels(const Workspace& ws) {
  std::vector<std::string> out;
  for (const auto& s : ws.stacks()) out.push_back(s.label);
  return out;
}

TEST(NewBlockTest, FirstStackIsA) {
  Workspace ws;
  auto id = ws.NewBlock("print");
  ASSERT_TRUE(id.ok());
  ASSERT_EQ(ws.stacks().size(), 1u);
  EXPECT_EQ(ws.stacks()[0].label, "A");
  EXPECT_EQ(ws.stacks()[0].top, *id);
  EXPECT_TRUE(Validate(ws).empty());
}

TEST(NewBlockTest, TakesLowestUnusedLabel) {
  Workspace ws = Outline("A: a:print | B: b:print");
  ASSERT_TRUE(ws.NewBlock("repeat").ok());
  EXPECT_EQ(Labels(ws), (std::vector<std::string>{"A", "B", "C"}));

  Workspace gap = Outline("A: a:print | C: c:print");
  ASSERT_TRUE(gap.NewBlock("print").ok());
  EXPECT_EQ(Labels(gap), (std::vector<std::string>{"A", "B", "C"}));
}

TEST(NewBlockTest, Errors) {
  Workspace ws;
  EXPECT_EQ(ws.NewBlock("nosuch").error().code, ErrorCode::kUnknownDefinition);
  EXPECT_EQ(ws.NewBlock("number", {{"VALUE", std::string("x")}}).error().code,
            ErrorCode::kBadFieldValue);
  EXPECT_EQ(ws.NewBlock("number", {{"NOPE", 1.0}}).error().code,
            ErrorCode::kBadFieldValue);
  EXPECT_TRUE(ws.empty());
}

TEST(NewBlockTest, MissingFieldsTakeDefaults) {
  Workspace ws;
  auto id = ws.NewBlock("set_var");
  ASSERT_TRUE(id.ok());
  EXPECT_EQ(std::get<std::string>(ws.FindBlock(*id)->field_values.at("VAR")),
            "x");
}

TEST(ConnectTest, FillsEmptyValueSlot) {
  Workspace ws = Outline("A: r:repeat | B: n:number{VALUE=5}");
  ASSERT_TRUE(ws.Connect(ConnectionRef::ValueSlot("r", "TIMES"), "n").ok());
  EXPECT_EQ(ws.stacks().size(), 1u);
  EXPECT_EQ(ws.FindBlock("r")->value_slots.at("TIMES"), "n");
  EXPECT_TRUE(Validate(ws).empty());
}

TEST(ConnectTest, AppendsToTail) {
  Workspace ws = Outline("A: p1:print | B: p2:print");
  ASSERT_TRUE(ws.Connect(ConnectionRef::Next("p1"), "p2").ok());
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"p1", "p2"}));
  EXPECT_EQ(ws.FindStack("B"), nullptr);
}

TEST(ConnectTest, InsertedChainKeepsOldSuccessor) {
  Workspace ws = Outline("A: a:print > c:print | B: b1:print > b2:print");
  ASSERT_TRUE(ws.Connect(ConnectionRef::Next("a"), "b1").ok());
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"a", "b1", "b2", "c"}));
  EXPECT_TRUE(Validate(ws).empty());
}

TEST(ConnectTest, Incompatible) {
  Workspace ws = Outline("A: r:repeat | B: n:number | C: t:text | D: p:print");
  EXPECT_EQ(ws.Connect(ConnectionRef::StatementSlot("r", "BODY"), "n").error().code,
            ErrorCode::kIncompatibleConnection);
  EXPECT_EQ(ws.Connect(ConnectionRef::ValueSlot("r", "TIMES"), "t").error().code,
            ErrorCode::kIncompatibleConnection);
  EXPECT_EQ(ws.Connect(ConnectionRef::ValueSlot("r", "TIMES"), "p").error().code,
            ErrorCode::kIncompatibleConnection);
  EXPECT_EQ(ws.stacks().size(), 4u);
}

TEST(ConnectTest, OccupiedValueSlot) {
  Workspace ws = Outline("A: r:repeat[TIMES=n:number] | B: m:number");
  EXPECT_EQ(ws.Connect(ConnectionRef::ValueSlot("r", "TIMES"), "m").error().code,
            ErrorCode::kOccupiedValueSlot);
}

TEST(ConnectTest, RejectsNonRoot) {
  Workspace ws = Outline("A: a:print > b:print | B: c:print");
  EXPECT_FALSE(ws.Connect(ConnectionRef::Next("c"), "b").ok());
}

TEST(ConnectTest, StatementSlotPushesBodyDown) {
  Workspace ws = Outline("A: r:repeat[BODY=p:print] | B: q:print");
  ASSERT_TRUE(ws.Connect(ConnectionRef::StatementSlot("r", "BODY"), "q").ok());
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"r", "q", "p"}));
}

TEST(DetachTest, HealMiddleOfThree) {
  Workspace ws = Outline("A@10,10: a:print > b:print > c:print");
  auto top = ws.Detach("b", true);
  ASSERT_TRUE(top.ok());
  EXPECT_EQ(*top, "b");
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"a", "c"}));
  const Stack* moved = ws.StackOf("b");
  ASSERT_NE(moved, nullptr);
  EXPECT_EQ(moved->label, "B");
  EXPECT_EQ(*Preorder(ws, "B"), (std::vector<BlockId>{"b"}));
  EXPECT_EQ(moved->position, (Position{50, 50}));
  EXPECT_TRUE(Validate(ws).empty());
}

TEST(DetachTest, WithoutHealTailTravels) {
  Workspace ws = Outline("A: a:print > b:print > c:print");
  ASSERT_TRUE(ws.Detach("b", false).ok());
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"a"}));
  EXPECT_EQ(*Preorder(ws, "B"), (std::vector<BlockId>{"b", "c"}));
}

TEST(DetachTest, StackTopIsNoOp) {
  Workspace ws = Outline("A: a:print > b:print");
  Workspace before = ws;
  auto top = ws.Detach("a", true);
  ASSERT_TRUE(top.ok());
  EXPECT_EQ(*top, "a");
  EXPECT_EQ(ws.blocks(), before.blocks());
  EXPECT_EQ(ws.stacks(), before.stacks());
}

TEST(DetachTest, NestedBodyTravels) {
  Workspace ws = Outline(
      "A: p:print > r:repeat[TIMES=n:number; BODY=x:print > y:print] > z:print");
  std::vector<BlockId> subtree = ws.Subtree("r");
  ASSERT_TRUE(ws.Detach("r", true).ok());
  EXPECT_EQ(*Preorder(ws, "B"), subtree);
  EXPECT_EQ(*Preorder(ws, "A"), (std::vector<BlockId>{"p", "z"}));
}

TEST(DetachTest, UnknownBlock) {
  Workspace ws;
  EXPECT_EQ(ws.Detach("nope", true).error().code, ErrorCode::kUnknownBlock);
}

TEST(DeleteBlockTest, StackTopHandsStackToSuccessor) {
  Workspace ws = Outline("A: a:print > b:print");
  ASSERT_TRUE(ws.DeleteBlock("a").ok());
  ASSERT_NE(ws.FindStack("A"), nullptr);
  EXPECT_EQ(ws.FindStack("A")->top, "b");
  EXPECT_EQ(ws.FindBlock("a"), nullptr);
}

TEST(DeleteBlockTest, LoneTopRetiresStack) {
  Workspace ws = Outline("A: a:print | B: b:print");
  ASSERT_TRUE(ws.DeleteBlock("a").ok());
  EXPECT_EQ(Labels(ws), (std::vector<std::string>{"B"}));
  ASSERT_TRUE(ws.NewBlock("print").ok());
  EXPECT_EQ(Labels(ws), (std::vector<std::string>{"A", "B"}));
}

TEST(ValidateTest, SharedChild) {
  Workspace ws = Outline("A: a:print > b:print | B: c:print");
  ws.mutable_blocks().at("c").next = "b";
  ws.Reindex();
  auto v = Validate(ws);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.kind == ViolationKind::kSharedChild && x.subject == "b";
  }));
}

TEST(ValidateTest, ValueBlockInNextChain) {
  Workspace ws = Outline("A: a:print | B: n:number");
  ws.mutable_blocks().at("a").next = "n";
  ws.mutable_stacks().erase(ws.mutable_stacks().begin() + 1);
  ws.Reindex();
  auto v = Validate(ws);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kKindMismatch);
  EXPECT_EQ(v[0].subject, "n");
}

TEST(ValidateTest, DanglingNextHasPath) {
  Workspace ws = Outline("A: b7:print");
  ws.mutable_blocks().at("b7").next = "b99";
  ws.Reindex();
  auto v = Validate(ws);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kDanglingReference);
  EXPECT_EQ(v[0].path, "blocks.b7.next");
}

TEST(ValidateTest, TypeMismatchInSlot) {
  Workspace ws = Outline("A: r:repeat | B: t:text");
  ws.mutable_blocks().at("r").value_slots["TIMES"] = "t";
  ws.mutable_stacks().pop_back();
  ws.Reindex();
  auto v = Validate(ws);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kTypeMismatch);
}

TEST(ValidateTest, OrphanAndDuplicateLabel) {
  Workspace ws = Outline("A: a:print | B: b:print");
  ws.mutable_stacks()[1].label = "A";
  ws.mutable_blocks()["o"] = Block{"o", "print", {}, {{"VALUE", {}}}, {}, {}, {}};
  ws.Reindex();
  auto v = Validate(ws);
  auto has = [&](ViolationKind k) {
    return std::any_of(v.begin(), v.end(),
                       [&](const Violation& x) { return x.kind == k; });
  };
  EXPECT_TRUE(has(ViolationKind::kDuplicateLabel));
  EXPECT_TRUE(has(ViolationKind::kOrphan));
}

TEST(PreorderTest, Examples) {
  EXPECT_EQ(*Preorder(Outline("A: p:print"), "A"), (std::vector<BlockId>{"p"}));
  EXPECT_EQ(*Preorder(Outline("A: r:repeat[TIMES=n:number{VALUE=10}; "
                              "BODY=p1:print > p2:print]"),
                      "A"),
            (std::vector<BlockId>{"r", "n", "p1", "p2"}));
  EXPECT_EQ(*Preorder(Outline("A: i:if[COND=c:compare[A=a:number; B=b:number]]"),
                      "A"),
            (std::vector<BlockId>{"i", "c", "a", "b"}));
  EXPECT_EQ(Preorder(Workspace(), "A").error().code, ErrorCode::kUnknownStack);
}

TEST(ChildrenTest, Examples) {
  Workspace ws = Outline("A: n:number | B: r:repeat | C: q:repeat[TIMES=m:number; BODY=p:print]");
  EXPECT_EQ(Children(ws, "n"),
            (std::vector<ElementRef>{{ElementKind::kField, "VALUE", {}}}));
  EXPECT_EQ(Children(ws, "r"),
            (std::vector<ElementRef>{{ElementKind::kValueInput, "TIMES", {}},
                                     {ElementKind::kStatementInput, "BODY", {}}}));
  EXPECT_EQ(Children(ws, "q"),
            (std::vector<ElementRef>{{ElementKind::kValueInput, "TIMES", "m"},
                                     {ElementKind::kStatementInput, "BODY", "p"}}));
  auto set = Children(Outline("A: s:set_var"), "s");
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].kind, ElementKind::kField);
  EXPECT_TRUE(set[1].empty_connection());
}

// Independent preorder: recursive walk over the raw block map.
std::vector<BlockId> WalkPreorder(const Workspace& ws, const BlockId& top) {
  std::vector<BlockId> out;
  std::function<void(const BlockId&)> seq = [&](const BlockId& head) {
    std::optional<BlockId> cur = head;
    while (cur) {
      const Block& b = ws.blocks().at(*cur);
      const BlockDefinition* def = ws.block_set().Find(b.def_id);
      out.push_back(*cur);
      for (const auto& in : def->value_inputs) {
        auto it = b.value_slots.find(in.name);
        if (it != b.value_slots.end() && it->second) seq(*it->second);
      }
      for (const auto& in : def->statement_inputs) {
        auto it = b.statement_slots.find(in.name);
        if (it != b.statement_slots.end() && it->second) seq(*it->second);
      }
      cur = b.next;
    }
  };
  seq(top);
  return out;
}

TEST(WorkspacePropertyTest, GeneratedWorkspacesAreValidAndCovered) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    Workspace ws = testing::GenerateWorkspace(seed);
    ASSERT_TRUE(Validate(ws).empty()) << seed;
    size_t total = 0;
    for (const auto& s : ws.stacks()) {
      auto order = Preorder(ws, s.label);
      ASSERT_TRUE(order.ok());
      EXPECT_EQ(*order, WalkPreorder(ws, s.top)) << seed;
      total += order->size();
    }
    EXPECT_EQ(total, ws.blocks().size()) << seed;
  }
}

TEST(WorkspacePropertyTest, DetachThenReconnectRestoresTree) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Workspace ws = testing::GenerateWorkspace(seed);
    for (const auto& [id, block] : ws.blocks()) {
      auto link = ws.ParentOf(id);
      if (!link || link->kind != LinkKind::kValueSlot) continue;
      Workspace copy = ws;
      ASSERT_TRUE(copy.Detach(id, true).ok());
      ASSERT_TRUE(Validate(copy).empty());
      ASSERT_TRUE(copy.Connect(ConnectionRef::ValueSlot(link->parent, link->input),
                               id).ok());
      EXPECT_EQ(copy.blocks(), ws.blocks()) << seed << " " << id;
      EXPECT_EQ(Labels(copy), Labels(ws));
    }
  }
}

TEST(WorkspacePropertyTest, LabelsStableAcrossEdits) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Workspace ws = testing::GenerateWorkspace(seed);
    std::map<BlockId, std::string> top_label;
    for (const auto& s : ws.stacks()) top_label[s.top] = s.label;
    std::vector<BlockId> ids;
    for (const auto& [id, b] : ws.blocks()) ids.push_back(id);
    for (const auto& id : ids) {
      if (!ws.FindBlock(id) || ws.IsStackTop(id)) continue;
      ASSERT_TRUE(ws.Detach(id, true).ok());
      ASSERT_TRUE(Validate(ws).empty());
      for (const auto& [top, label] : top_label) {
        const Stack* s = ws.StackOf(top);
        ASSERT_NE(s, nullptr);
        EXPECT_EQ(s->label, label);
      }
    }
  }
}

}  // namespace
}  // namespace eaf
