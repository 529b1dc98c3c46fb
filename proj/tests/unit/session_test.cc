#include "eaf/session.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eaf/serialization.h"
#include "generator.h"
#include "outline.h"

namespace eaf {
namespace {

using testing::Outline;
using Loc = CursorLocation;

std::vector<Announcement> Press(Session& s, std::string_view chord,
                                std::string_view arg = {}) {
  auto parsed = KeyChord::Parse(chord);
  EXPECT_TRUE(parsed.ok()) << chord;
  return s.Apply(*parsed, arg).announcements;
}

std::string Last(const std::vector<Announcement>& a) {
  return a.empty() ? std::string() : a.back().text;
}

bool Contains(const std::vector<Announcement>& a, std::string_view text) {
  for (const auto& x : a)
    if (x.text.find(text) != std::string::npos) return true;
  return false;
}

TEST(SessionTest, StartsAtOrigin) {
  Session s(Outline("A: p:print"));
  EXPECT_EQ(s.cursor(), Loc::WorkspacePoint({0, 0}));
  EXPECT_EQ(s.mode(), Mode::kNavigation);
  EXPECT_TRUE(s.CheckInvariants().ok());
}

TEST(SessionTest, ToolboxEnterOnEmptyWorkspace) {
  Session s;
  Press(s, "T");
  EXPECT_TRUE(s.state().toolbox.open);
  Press(s, "Enter");
  EXPECT_FALSE(s.state().toolbox.open);
  ASSERT_EQ(s.workspace().stacks().size(), 1u);
  EXPECT_EQ(s.workspace().stacks()[0].label, "A");
  EXPECT_TRUE(Contains(Press(s, "C"), "Stack A, block 1 of 1"));
}

TEST(SessionTest, ZoomSteps) {
  Session s;
  std::vector<Announcement> a;
  for (int i = 0; i < 3; ++i) a = Press(s, "+");
  EXPECT_NEAR(s.zoom(), 1.728, 1e-12);
  EXPECT_EQ(Last(a), "zoom 173%");
  EXPECT_EQ(Last(Press(s, "0")), "zoom reset 100%");
  EXPECT_EQ(s.zoom(), 1.0);
  EXPECT_EQ(Last(Press(s, "-")), "zoom 83%");
  EXPECT_NEAR(s.zoom(), 1 / 1.2, 1e-12);
}

TEST(SessionTest, ZoomClamps) {
  Session s;
  std::vector<Announcement> a;
  for (int i = 0; i < 20; ++i) a = Press(s, "+");
  EXPECT_EQ(s.zoom(), kMaxZoom);
  EXPECT_NE(Last(a).find("maximum zoom"), std::string::npos);
  for (int i = 0; i < 40; ++i) a = Press(s, "-");
  EXPECT_EQ(s.zoom(), kMinZoom);
  EXPECT_NE(Last(a).find("minimum zoom"), std::string::npos);
  Press(s, "0");
  EXPECT_EQ(s.zoom(), 1.0);
}

TEST(SessionTest, ZoomDoesNotChangeHash) {
  Session s(Outline("A: p:print"));
  std::string before = StateHash(s.workspace());
  Press(s, "+");
  Press(s, "-");
  EXPECT_EQ(StateHash(s.workspace()), before);
}

TEST(SessionTest, MasterSwitch) {
  Session s(Outline("A: p:print"));
  Press(s, "Ctrl+Shift+K");
  EXPECT_FALSE(s.accessibility_on());
  std::string before = SaveWorkspace(s.workspace());
  Loc cursor = s.cursor();
  for (const char* k : {"F", "S", "E", "Delete", "T", "Ctrl+X", "Alt+A"}) {
    EXPECT_TRUE(Press(s, k).empty()) << k;
  }
  EXPECT_EQ(SaveWorkspace(s.workspace()), before);
  EXPECT_EQ(s.cursor(), cursor);
  Press(s, "Ctrl+Shift+K");
  EXPECT_TRUE(s.accessibility_on());
  EXPECT_FALSE(Press(s, "F").empty());
}

TEST(SessionTest, NavigationModeEditIsAssertiveError) {
  Session s(Outline("A: a:print > b:print"));
  Press(s, "Alt+A");
  Press(s, "S");
  auto a = Press(s, "Shift+X");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].politeness, Politeness::kAssertive);
  EXPECT_EQ(a[0].category, Category::kError);
  EXPECT_EQ(s.workspace().stacks().size(), 1u);
}

TEST(SessionTest, EditModeFlow) {
  Session s(Outline("A: r:repeat"));
  Press(s, "Alt+A");
  EXPECT_TRUE(Contains(Press(s, "E"), "Edit mode"));
  Press(s, "F");
  Press(s, "D");
  EXPECT_EQ(s.cursor(), Loc::Element("r", 1));
  Press(s, "T");
  Press(s, "Enter");
  EXPECT_TRUE(s.workspace().FindBlock("r")->statement_slots.at("BODY").has_value());
  EXPECT_TRUE(s.CheckInvariants().ok());
}

TEST(SessionTest, FieldEditing) {
  Session s(Outline("A: n:number"));
  Press(s, "Alt+A");
  Press(s, "E");
  Press(s, "F");
  Press(s, "F");
  ASSERT_TRUE(s.state().field_edit.has_value());
  Press(s, "1");
  Press(s, "2");
  Press(s, "S");
  EXPECT_EQ(s.state().field_edit->buffer, "12s");
  Press(s, "Backspace");
  Press(s, "Enter");
  EXPECT_FALSE(s.state().field_edit.has_value());
  EXPECT_EQ(std::get<double>(s.workspace().FindBlock("n")->field_values.at("VALUE")),
            12.0);
}

TEST(SessionTest, RenameAndComment) {
  Session s(Outline("A: p:print"));
  Press(s, "Alt+A");
  Press(s, "Shift+I", "main loop");
  EXPECT_EQ(s.workspace().FindStack("A")->custom_name, "main loop");
  Press(s, "E");
  Press(s, "Ctrl+/", "loop counter");
  EXPECT_EQ(s.workspace().FindBlock("p")->comment, (Comment{"loop counter", true}));
}

TEST(SessionTest, AssistantAndHelp) {
  Session s(Outline("A: p:print"));
  auto on = Press(s, "Shift+H");
  EXPECT_TRUE(s.assistant_on());
  EXPECT_GE(on.size(), 1u);
  auto moved = Press(s, "Alt+A");
  EXPECT_EQ(Last(moved), "F: enter print, value input. Q: stack A.");
  Press(s, "Shift+H");
  EXPECT_EQ(Press(s, "F").size(), 1u);

  auto help = Press(s, "Shift+K");
  EXPECT_TRUE(s.help_open());
  ASSERT_FALSE(help.empty());
  EXPECT_NE(help[0].text.find("Shift+R"), std::string::npos);
  Press(s, "Shift+K");
  EXPECT_FALSE(s.help_open());
}

TEST(SessionTest, RunAndOutput) {
  Session s(Outline(
      "A: r:repeat[TIMES=n:number{VALUE=2}; BODY=p:print[VALUE=t:text{VALUE=\"hi\"}]]"));
  EXPECT_EQ(Press(s, "Shift+O").size(), 1u);
  auto run = Press(s, "Shift+R");
  EXPECT_TRUE(Contains(run, "2 lines of output"));
  auto out = Press(s, "Shift+O");
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1].text, "hi");
}

TEST(SessionTest, ToolboxBlocksOtherCommands) {
  Session s(Outline("A: p:print"));
  Press(s, "T");
  auto a = Press(s, "Delete");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].category, Category::kError);
  Press(s, "Esc");
  EXPECT_EQ(s.cursor(), Loc::WorkspacePoint({0, 0}));
}

TEST(SessionTest, VerbosityAffectsText) {
  SessionOptions terse;
  terse.verbosity = Verbosity::kTerse;
  Session a(Outline("A: p:print"), terse);
  Session b(Outline("A: p:print"));
  std::string t = Last(Press(a, "Alt+A"));
  std::string st = Last(Press(b, "Alt+A"));
  EXPECT_NE(t, st);
  EXPECT_NE(st.find(t), std::string::npos);
}

TEST(SessionPropertyTest, FuzzKeepsInvariants) {
  const char* chords[] = {"W", "A", "S", "D", "F", "Q", "E", "Shift+W",
                          "Shift+S", "Shift+A", "Shift+D", "T", "Esc", "Enter",
                          "C", "Ctrl+X", "Ctrl+C", "Ctrl+V", "Delete", "Ctrl+/",
                          "Shift+X", "Shift+H", "Shift+K", "Shift+I", "Shift+R",
                          "Shift+O", "+", "-", "0", "Alt+A", "Alt+B", "Alt+C",
                          "5", "Backspace"};
  std::mt19937_64 rng(42);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    testing::GenOptions small;
    small.max_blocks = 12;
    Session s(testing::GenerateWorkspace(seed, small));
    for (int i = 0; i < 300; ++i) {
      const char* c = chords[rng() % std::size(chords)];
      Press(s, c, rng() % 3 == 0 ? "x" : "");
      ASSERT_TRUE(s.CheckInvariants().ok())
          << seed << " step " << i << " " << c << ": "
          << s.CheckInvariants().error().detail;
    }
  }
}

}  // namespace
}  // namespace eaf
