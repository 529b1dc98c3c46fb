#include "eaf/runtime.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eaf/serialization.h"
#include "generator.h"
#include "outline.h"

namespace eaf {
namespace {

using testing::Outline;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kPrograms =
    std::filesystem::path(EAF_DATA_DIR) / "programs";

TEST(RunTest, RepeatPrint) {
  Output out = eaf::Run(Outline(
      "A: r:repeat[TIMES=n:number{VALUE=3}; BODY=p:print[VALUE=t:text{VALUE=\"hi\"}]]"));
  EXPECT_EQ(out.status, RunStatus::kOk);
  EXPECT_EQ(out.lines, (std::vector<std::string>{"hi", "hi", "hi"}));
  // repeat + times + 3 * (print + text)
  EXPECT_EQ(out.steps, 8);
}

TEST(RunTest, EmptyValueSlot) {
  Output out = eaf::Run(Outline("A: p:print"));
  EXPECT_EQ(out.status, RunStatus::kError);
  EXPECT_TRUE(out.lines.empty());
  EXPECT_EQ(out.message, "empty value input at block 1 of stack A");
}

TEST(RunTest, StepLimit) {
  Output out = eaf::Run(Outline(
      "A: r:repeat[TIMES=n:number{VALUE=1000000000}; "
      "BODY=p:print[VALUE=t:text{VALUE=\"x\"}]]"));
  EXPECT_EQ(out.status, RunStatus::kStepLimit);
  EXPECT_EQ(out.steps, kDefaultStepLimit);
  // 2 steps before the body, 2 per iteration.
  EXPECT_EQ(out.lines.size(), static_cast<size_t>((kDefaultStepLimit - 2) / 2));
  EXPECT_EQ(out.message, "step limit of 100000 reached");
}

TEST(RunTest, SmallLimit) {
  Output out = eaf::Run(Outline("A: p:print[VALUE=t:text] > q:print[VALUE=u:text]"), 3);
  EXPECT_EQ(out.status, RunStatus::kStepLimit);
  EXPECT_EQ(out.steps, 3);
  EXPECT_EQ(out.lines.size(), 1u);
}

TEST(RunTest, EmptyBodyHugeCountIsCheap) {
  Output out = eaf::Run(Outline("A: r:repeat[TIMES=n:number{VALUE=1e12}]"));
  EXPECT_EQ(out.status, RunStatus::kOk);
  EXPECT_EQ(out.steps, 2);
}

TEST(RunTest, StacksRunInLabelOrder) {
  Output out = eaf::Run(Outline(
      "B@0,0: b:print[VALUE=t:text{VALUE=\"second\"}] | "
      "A@300,300: a:print[VALUE=u:text{VALUE=\"first\"}] | "
      "C: n:number{VALUE=4}"));
  EXPECT_EQ(out.lines, (std::vector<std::string>{"first", "second"}));
}

TEST(EvalValueTest, Examples) {
  Workspace ws = Outline(
      "A: n:number{VALUE=5} | "
      "B: c:compare{OP=\"<\"}[A=x:number{VALUE=2}; B=y:number{VALUE=3}] | "
      "C: d:arithmetic{OP=\"/\"}[A=p:number{VALUE=1}; B=q:number{VALUE=0}] | "
      "D: g:var_get{VAR=\"k\"}");
  EXPECT_EQ(*EvalValue(ws, "n", {}), Value(5.0));
  EXPECT_EQ(*EvalValue(ws, "c", {}), Value(true));
  auto div = EvalValue(ws, "d", {});
  ASSERT_FALSE(div.ok());
  EXPECT_EQ(div.error().code, ErrorCode::kRuntimeError);
  EXPECT_EQ(div.error().detail.rfind("division by zero", 0), 0u);
  EXPECT_EQ(EvalValue(ws, "g", {}).error().code, ErrorCode::kRuntimeError);
  EXPECT_EQ(*EvalValue(ws, "g", {{"k", Value(std::string("v"))}}),
            Value(std::string("v")));
}

TEST(EvalValueTest, Arithmetic) {
  auto eval = [](const char* op, double a, double b) {
    Workspace ws = Outline(std::string("A: d:arithmetic{OP=\"") + op +
                           "\"}[A=p:number{VALUE=" + FormatNumber(a) +
                           "}; B=q:number{VALUE=" + FormatNumber(b) + "}]");
    return std::get<double>(*EvalValue(ws, "d", {}));
  };
  EXPECT_EQ(eval("+", 2, 3), 5);
  EXPECT_EQ(eval("-", 2, 3), -1);
  EXPECT_EQ(eval("*", 2.5, 4), 10);
  EXPECT_EQ(eval("/", 7, 2), 3.5);
}

TEST(ValueTextTest, Forms) {
  EXPECT_EQ(ValueText(Value(3.0)), "3");
  EXPECT_EQ(ValueText(Value(3.5)), "3.5");
  EXPECT_EQ(ValueText(Value(true)), "true");
  EXPECT_EQ(ValueText(Value(std::string("hi"))), "hi");
}

TEST(ProgramsTest, MatchExpected) {
  auto expected = nlohmann::json::parse(ReadFile(kPrograms / "expected.json"));
  ASSERT_EQ(expected.size(), 10u);
  for (const auto& [name, want] : expected.items()) {
    auto ws = LoadWorkspace(ReadFile(kPrograms / (name + ".bws.json")));
    ASSERT_TRUE(ws.ok()) << name;
    Output out = eaf::Run(*ws);
    EXPECT_EQ(RunStatusName(out.status), want.at("status").get<std::string>())
        << name;
    if (want.contains("lines"))
      EXPECT_EQ(out.lines, want.at("lines").get<std::vector<std::string>>())
          << name;
    if (want.contains("line_count"))
      EXPECT_EQ(out.lines.size(), want.at("line_count").get<size_t>()) << name;
    if (want.contains("first_line"))
      EXPECT_EQ(out.lines.at(0), want.at("first_line").get<std::string>());
    if (want.contains("message"))
      EXPECT_EQ(out.message, want.at("message").get<std::string>()) << name;
    if (want.contains("steps"))
      EXPECT_EQ(out.steps, want.at("steps").get<long long>()) << name;
  }
}

TEST(RuntimePropertyTest, DeterministicPureBounded) {
  for (uint64_t seed = 1; seed <= 150; ++seed) {
    Workspace ws = testing::GenerateWorkspace(seed);
    const std::string before = SaveWorkspace(ws);
    Output a = eaf::Run(ws, 5000);
    Output b = eaf::Run(ws, 5000);
    EXPECT_EQ(a, b) << seed;
    EXPECT_LE(a.steps, 5000) << seed;
    EXPECT_EQ(a.status == RunStatus::kOk, a.message.empty()) << seed;
    EXPECT_EQ(SaveWorkspace(ws), before) << seed;
  }
}

}  // namespace
}  // namespace eaf
