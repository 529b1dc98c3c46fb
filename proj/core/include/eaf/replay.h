#ifndef EAF_REPLAY_H_
#define EAF_REPLAY_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eaf/session.h"

namespace eaf {

// One line of a .keys script: a chord and an optional quoted argument.
struct ScriptLine {
  size_t line = 0;
  KeyChord chord;
  std::string arg;
};

// Grammar per line: CHORD [ "argument" ]. '#' starts a comment outside
// quotes (a line that is only "#" names the key); blank lines are skipped.
// Quotes support \" \\ and \n escapes. Errors are kScriptParseError with
// "line N: reason".
Result<std::vector<ScriptLine>> ParseScript(std::string_view text);

struct TranscriptEntry {
  std::string chord;
  std::string arg;
  std::string command;
  std::vector<Announcement> announcements;
  std::string cursor;
  std::string mode;
  std::string state_hash;
};

struct Transcript {
  std::string verbosity;
  std::string initial_hash;
  std::vector<TranscriptEntry> entries;
  std::string final_state;  // Canonical workspace text.
  std::string final_hash;
};

// Applies every line to |session| in order.
Transcript Replay(Session& session, const std::vector<ScriptLine>& script);

nlohmann::json TranscriptToJson(const Transcript& transcript);
// Deterministic text form: two-space indent, LF, trailing newline.
std::string TranscriptText(const Transcript& transcript);

}  // namespace eaf

#endif  // EAF_REPLAY_H_
