#include "eaf/replay.h"

#include <cctype>

#include "eaf/serialization.h"

namespace eaf {

namespace {

Error ScriptError(size_t line, const std::string& reason) {
  return Error{ErrorCode::kScriptParseError,
               "line " + std::to_string(line) + ": " + reason};
}

Result<std::string> ParseQuoted(std::string_view text, size_t line) {
  std::string out;
  size_t i = 1;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"')
      break;
    if (c == '\\') {
      if (++i >= text.size())
        return ScriptError(line, "unfinished escape");
      switch (text[i]) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        default:
          return ScriptError(line, std::string("unknown escape \\") + text[i]);
      }
      continue;
    }
    out += c;
  }
  if (i >= text.size())
    return ScriptError(line, "missing closing quote");
  std::string_view rest = text.substr(i + 1);
  size_t k = rest.find_first_not_of(" \t\r");
  if (k != std::string_view::npos && rest[k] != '#')
    return ScriptError(line, "unexpected text after argument");
  return out;
}

}  // namespace

Result<std::vector<ScriptLine>> ParseScript(std::string_view text) {
  std::vector<ScriptLine> script;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
      if (end == text.size())
        break;
      continue;
    }
    line = line.substr(a);
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(0, b + 1);
    size_t token_end = line.find_first_of(" \t");
    std::string_view token = line.substr(0, token_end);
    // "#" alone or followed by text is a comment unless it is the chord.
    if (token.front() == '#' && token.size() > 1)
      continue;
    if (token == "#" && token_end != std::string_view::npos)
      continue;
    auto chord = KeyChord::Parse(token);
    if (!chord.ok())
      return ScriptError(line_no, chord.error().detail);
    ScriptLine entry{line_no, *chord, {}};
    if (token_end != std::string_view::npos) {
      std::string_view rest = line.substr(token_end);
      rest = rest.substr(rest.find_first_not_of(" \t"));
      if (rest.front() == '"') {
        auto arg = ParseQuoted(rest, line_no);
        if (!arg.ok())
          return arg.error();
        entry.arg = *arg;
      } else if (rest.front() != '#') {
        return ScriptError(line_no, "arguments must be quoted");
      }
    }
    script.push_back(std::move(entry));
    if (end == text.size())
      break;
  }
  return script;
}

Transcript Replay(Session& session, const std::vector<ScriptLine>& script) {
  Transcript transcript;
  transcript.verbosity = std::string(VerbosityName(session.verbosity()));
  transcript.initial_hash = StateHash(session.workspace());
  for (const auto& line : script) {
    Step step = session.Apply(line.chord, line.arg);
    TranscriptEntry entry;
    entry.chord = step.chord.ToString();
    entry.arg = line.arg;
    entry.command = step.command.ToString();
    entry.announcements = std::move(step.announcements);
    entry.cursor = session.cursor().ToString();
    entry.mode = std::string(ModeName(session.mode()));
    entry.state_hash = StateHash(session.workspace());
    transcript.entries.push_back(std::move(entry));
  }
  transcript.final_state = SaveWorkspace(session.workspace());
  transcript.final_hash = Sha256Hex(transcript.final_state);
  return transcript;
}

nlohmann::json TranscriptToJson(const Transcript& transcript) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : transcript.entries) {
    nlohmann::json announcements = nlohmann::json::array();
    for (const auto& a : entry.announcements) {
      announcements.push_back({{"text", a.text},
                               {"politeness", PolitenessName(a.politeness)},
                               {"category", CategoryName(a.category)}});
    }
    nlohmann::json e = {{"chord", entry.chord},
                        {"command", entry.command},
                        {"announcements", announcements},
                        {"cursor", entry.cursor},
                        {"mode", entry.mode},
                        {"state_hash", entry.state_hash}};
    if (!entry.arg.empty())
      e["arg"] = entry.arg;
    entries.push_back(std::move(e));
  }
  return {{"verbosity", transcript.verbosity},
          {"initial_hash", transcript.initial_hash},
          {"entries", entries},
          {"final_state", nlohmann::json::parse(transcript.final_state)},
          {"final_hash", transcript.final_hash}};
}

std::string TranscriptText(const Transcript& transcript) {
  return TranscriptToJson(transcript).dump(2) + "\n";
}

}  // namespace eaf
