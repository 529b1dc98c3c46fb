// eaf: replay keystroke scripts, run, validate and format workspace files.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eaf/replay.h"
#include "eaf/runtime.h"
#include "eaf/serialization.h"
#include "eaf/session.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBreach = 2;

bool UseColor() {
  return std::getenv("EAF_NO_COLOR") == nullptr && isatty(STDERR_FILENO);
}

int Report(const std::string& message, int code) {
  if (UseColor())
    std::cerr << "\033[31merror:\033[0m " << message << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return code;
}

bool ReadFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

eaf::Result<eaf::Workspace> LoadFile(const std::string& path) {
  std::string text;
  if (!ReadFile(path, text))
    return eaf::MakeError(eaf::ErrorCode::kParseError, "cannot read " + path);
  return eaf::LoadWorkspace(text);
}

std::string Describe(const eaf::Error& error) {
  return std::string(eaf::ErrorCodeName(error.code)) + ": " + error.detail;
}

int Replay(const std::string& workspace_path, const std::string& script_path,
           const std::string& keymap_path, const std::string& verbosity,
           const std::string& out_path) {
  auto ws = LoadFile(workspace_path);
  if (!ws.ok())
    return Report(workspace_path + ": " + Describe(ws.error()), kExitInvalid);
  std::string script_text;
  if (!ReadFile(script_path, script_text))
    return Report("cannot read " + script_path, kExitInvalid);
  auto script = eaf::ParseScript(script_text);
  if (!script.ok())
    return Report(script_path + ": " + Describe(script.error()), kExitInvalid);

  eaf::SessionOptions options;
  if (!keymap_path.empty()) {
    std::string keymap_text;
    if (!ReadFile(keymap_path, keymap_text))
      return Report("cannot read " + keymap_path, kExitInvalid);
    auto keymap = eaf::ApplyKeymapOverrides(options.keymap, keymap_text);
    if (!keymap.ok())
      return Report(keymap_path + ": " + Describe(keymap.error()),
                    kExitInvalid);
    options.keymap = *keymap;
  }
  auto level = eaf::ParseVerbosity(verbosity);
  if (!level)
    return Report("unknown verbosity " + verbosity, kExitInvalid);
  options.verbosity = *level;

  eaf::Session session(std::move(*ws), std::move(options));
  eaf::Transcript transcript = eaf::Replay(session, *script);
  eaf::Status health = session.CheckInvariants();
  std::string text = eaf::TranscriptText(transcript);
  if (out_path.empty()) {
    std::cout << text;
  } else if (!WriteFile(out_path, text)) {
    return Report("cannot write " + out_path, kExitInvalid);
  }
  if (!health.ok())
    return Report("invariant breach: " + Describe(health.error()), kExitBreach);
  return kExitOk;
}

int RunProgram(const std::string& path) {
  auto ws = LoadFile(path);
  if (!ws.ok())
    return Report(path + ": " + Describe(ws.error()), kExitInvalid);
  eaf::Output out = eaf::Run(*ws);
  for (const auto& line : out.lines) std::cout << line << "\n";
  if (out.status != eaf::RunStatus::kOk)
    return Report("program " + std::string(eaf::RunStatusName(out.status)) + ": " +
                      out.message,
                  kExitInvalid);
  return kExitOk;
}

int Validate(const std::string& path) {
  auto ws = LoadFile(path);
  if (!ws.ok())
    return Report(path + ": " + Describe(ws.error()), kExitInvalid);
  std::cout << path << ": ok, " << ws->stacks().size() << " stacks, "
            << ws->blocks().size() << " blocks\n";
  return kExitOk;
}

int Format(const std::string& path, bool in_place) {
  auto ws = LoadFile(path);
  if (!ws.ok())
    return Report(path + ": " + Describe(ws.error()), kExitInvalid);
  std::string text = eaf::SaveWorkspace(*ws);
  if (!in_place) {
    std::cout << text;
    return kExitOk;
  }
  if (!WriteFile(path, text))
    return Report("cannot write " + path, kExitInvalid);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyboard-driven block workspace engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eaf 0.1.0");

  std::string workspace, script, keymap, out;
  std::string verbosity = "standard";
  bool in_place = false;

  CLI::App* replay = app.add_subcommand("replay", "Replay a keystroke script");
  replay->add_option("--workspace", workspace, "Workspace .bws.json")
      ->required();
  replay->add_option("--script", script, "Keystroke .keys script")->required();
  replay->add_option("--keymap", keymap, "Keymap override file");
  replay->add_option("--verbosity", verbosity, "terse, standard or verbose")
      ->check(CLI::IsMember({"terse", "standard", "verbose"}));
  replay->add_option("--out", out, "Transcript destination (default stdout)");

  CLI::App* run = app.add_subcommand("run", "Run the program in a workspace");
  run->add_option("--workspace", workspace, "Workspace .bws.json")->required();

  CLI::App* validate =
      app.add_subcommand("validate", "Check a workspace file");
  validate->add_option("--workspace", workspace, "Workspace .bws.json")
      ->required();

  CLI::App* fmt = app.add_subcommand("fmt", "Print the canonical form");
  fmt->add_option("--workspace", workspace, "Workspace .bws.json")->required();
  fmt->add_flag("-i,--in-place", in_place, "Rewrite the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (*replay)
    return Replay(workspace, script, keymap, verbosity, out);
  if (*run)
    return RunProgram(workspace);
  if (*validate)
    return Validate(workspace);
  return Format(workspace, in_place);
}
