#ifndef EAF_RUNTIME_H_
#define EAF_RUNTIME_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "eaf/workspace.h"

namespace eaf {

inline constexpr long long kDefaultStepLimit = 100000;

using Value = std::variant<double, std::string, bool>;

std::string ValueText(const Value& value);

using Environment = std::map<std::string, Value>;

enum class RunStatus { kOk, kError, kStepLimit };

std::string_view RunStatusName(RunStatus status);

struct Output {
  std::vector<std::string> lines;
  RunStatus status = RunStatus::kOk;
  std::string message;  // Empty when ok.
  long long steps = 0;

  bool operator==(const Output&) const = default;
};

// Runs every stack in label order. Each evaluated block costs one step.
Output Run(const Workspace& ws, long long step_limit = kDefaultStepLimit);

// Evaluates one value block against |env|. Runtime failures are
// kRuntimeError carrying the message.
Result<Value> EvalValue(const Workspace& ws, const BlockId& id,
                        const Environment& env);

}  // namespace eaf

#endif  // EAF_RUNTIME_H_
