#ifndef EAF_TESTS_ACCEPTANCE_SCENARIOS_H_
#define EAF_TESTS_ACCEPTANCE_SCENARIOS_H_

#include <string>
#include <vector>

namespace eaf::acceptance {

struct ScenarioResult {
  std::string name;
  std::string category;
  bool pass = false;
  std::string detail;  // First mismatch, empty on pass.
};

// Loads every *.scn file under |dir| and runs it.
std::vector<ScenarioResult> RunScenarioFiles(const std::string& dir);

// Labeling and numbering cases built from independent oracles.
std::vector<ScenarioResult> RunGeneratedLabelingScenarios();

}  // namespace eaf::acceptance

#endif  // EAF_TESTS_ACCEPTANCE_SCENARIOS_H_
