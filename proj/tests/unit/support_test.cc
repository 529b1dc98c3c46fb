#include <gtest/gtest.h>

#include "eaf/labeling.h"
#include "generator.h"
#include "outline.h"

namespace eaf::testing {
namespace {

TEST(OutlineTest, BuildsWiredBlocks) {
  Workspace ws = Outline(
      "A \"main loop\"@10,20: b1:repeat[TIMES=b2:number{VALUE=3}; BODY=b3:print] "
      "> b4:print!\"note\" | B: b5:set_var{VAR=\"n\"}!-\"hidden\"");
  ASSERT_EQ(ws.stacks().size(), 2u);
  EXPECT_EQ(ws.stacks()[0].custom_name, "main loop");
  EXPECT_EQ(ws.stacks()[0].position, (Position{10, 20}));
  EXPECT_EQ(ws.FindBlock("b1")->value_slots.at("TIMES"), "b2");
  EXPECT_EQ(ws.FindBlock("b1")->statement_slots.at("BODY"), "b3");
  EXPECT_EQ(ws.FindBlock("b1")->next, "b4");
  EXPECT_EQ(std::get<double>(ws.FindBlock("b2")->field_values.at("VALUE")), 3);
  EXPECT_EQ(ws.FindBlock("b4")->comment, (Comment{"note", true}));
  EXPECT_EQ(ws.FindBlock("b5")->comment, (Comment{"hidden", false}));
}

TEST(OutlineTest, Rejects) {
  EXPECT_FALSE(BuildOutline("A: x:nosuch").ok());
  EXPECT_FALSE(BuildOutline("A: p:print[BODY=q:print]").ok());
  EXPECT_FALSE(BuildOutline("A: p:print | A: q:print").ok());
}

TEST(OutlineTest, PrintRoundTrip) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Workspace ws = GenerateWorkspace(seed);
    auto back = BuildOutline(PrintOutline(ws));
    ASSERT_TRUE(back.ok()) << seed << ": " << back.error().detail;
    EXPECT_EQ(back->blocks(), ws.blocks()) << seed;
    EXPECT_EQ(back->stacks(), ws.stacks()) << seed;
  }
}

TEST(GeneratorTest, RespectsOptions) {
  GenOptions options;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Workspace ws = GenerateWorkspace(seed, options);
    EXPECT_GE(ws.stacks().size(), static_cast<size_t>(options.min_stacks));
    EXPECT_LE(ws.stacks().size(), static_cast<size_t>(options.max_stacks));
    EXPECT_LE(ws.blocks().size(), static_cast<size_t>(options.max_blocks));
    EXPECT_LE(MaxDepth(ws), options.max_depth);
  }
}

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(GenerateWorkspace(9).blocks(), GenerateWorkspace(9).blocks());
  EXPECT_NE(GenerateWorkspace(9).blocks(), GenerateWorkspace(10).blocks());
}

TEST(EnumerateTest, CountsFromDefinitions) {
  Workspace ws = Outline("A@0,0: r:repeat[BODY=p:print] | B@50,0: n:number");
  // Points: origin (also A) and B; heads 2; blocks 3; elements 2 + 1 + 1.
  EXPECT_EQ(EnumerateLocations(ws).size(), 2u + 2u + 3u + 4u);
}

TEST(EnumerateTest, Connections) {
  Workspace ws = Outline("A: r:repeat | B: n:number");
  // repeat: previous, next, TIMES, BODY; number: none.
  EXPECT_EQ(EnumerateConnections(ws).size(), 4u);
}

TEST(BruteForceTest, StatementNext) {
  Workspace ws = Outline("A: p:print");
  EXPECT_EQ(BruteForceCompatible(ws, ConnectionRef::Next("p")),
            (std::vector<std::string>{"print", "set_var", "repeat", "if"}));
}

}  // namespace
}  // namespace eaf::testing
