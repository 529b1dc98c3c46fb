#include "eaf/runtime.h"

#include <cmath>

namespace eaf {

namespace {

struct Halt {
  RunStatus status;
  std::string message;
};

class Interpreter {
 public:
  Interpreter(const Workspace& ws, long long limit, Environment env = {})
      : ws_(ws), limit_(limit), env_(std::move(env)) {}

  std::optional<Halt> RunSequence(std::optional<BlockId> id) {
    while (id) {
      if (auto halt = Exec(*id))
        return halt;
      id = ws_.FindBlock(*id)->next;
    }
    return std::nullopt;
  }

  std::variant<Value, Halt> Eval(const BlockId& id) {
    if (auto halt = Step())
      return *halt;
    const Block& block = *ws_.FindBlock(id);
    const std::string& type = block.def_id;
    if (type == "number" || type == "text")
      return ToValue(block.field_values.at("VALUE"));
    if (type == "boolean")
      return std::get<std::string>(block.field_values.at("VALUE")) == "true";
    if (type == "var_get") {
      std::string name = std::get<std::string>(block.field_values.at("VAR"));
      auto it = env_.find(name);
      if (it == env_.end())
        return Fail(id, "variable " + name + " is not set");
      return it->second;
    }
    if (type == "not") {
      auto a = Input(block, "A");
      if (auto* halt = std::get_if<Halt>(&a))
        return *halt;
      const bool* flag = std::get_if<bool>(&std::get<Value>(a));
      if (!flag)
        return Fail(id, "not needs true or false");
      return !*flag;
    }
    if (type == "arithmetic" || type == "compare" || type == "logic") {
      auto a = Input(block, "A");
      if (auto* halt = std::get_if<Halt>(&a))
        return *halt;
      auto b = Input(block, "B");
      if (auto* halt = std::get_if<Halt>(&b))
        return *halt;
      return Binary(id, type, std::get<std::string>(block.field_values.at("OP")),
                    std::get<Value>(a), std::get<Value>(b));
    }
    return Fail(id, type + " is not a value block");
  }

 private:
  std::optional<Halt> Step() {
    if (steps_ >= limit_)
      return Halt{RunStatus::kStepLimit,
                  "step limit of " + std::to_string(limit_) + " reached"};
    ++steps_;
    return std::nullopt;
  }

 public:
  long long steps() const { return steps_; }
  std::vector<std::string>& lines() { return lines_; }

 private:
  static Value ToValue(const FieldValue& v) {
    if (const double* d = std::get_if<double>(&v))
      return *d;
    return std::get<std::string>(v);
  }

  std::string Where(const BlockId& id) const {
    auto it = ws_.numbering().find(id);
    if (it == ws_.numbering().end())
      return "block " + id;
    return "block " + std::to_string(it->second.number) + " of stack " +
           it->second.label;
  }

  Halt Fail(const BlockId& id, const std::string& message) const {
    return Halt{RunStatus::kError, message + " at " + Where(id)};
  }

  std::variant<Value, Halt> Input(const Block& block, const std::string& name) {
    auto it = block.value_slots.find(name);
    if (it == block.value_slots.end() || !it->second) {
      const BlockDefinition* def = ws_.DefinitionOf(block.id);
      const ValueInputSpec* spec = def ? def->FindValueInput(name) : nullptr;
      return Fail(block.id,
                  "empty " + (spec ? spec->display : name) + " input");
    }
    return Eval(*it->second);
  }

  std::variant<Value, Halt> Binary(const BlockId& id, const std::string& type,
                                   const std::string& op, const Value& a,
                                   const Value& b) {
    if (type == "arithmetic") {
      const double* x = std::get_if<double>(&a);
      const double* y = std::get_if<double>(&b);
      if (!x || !y)
        return Fail(id, "arithmetic needs numbers");
      if (op == "+") return *x + *y;
      if (op == "-") return *x - *y;
      if (op == "*") return *x * *y;
      if (*y == 0)
        return Fail(id, "division by zero");
      return *x / *y;
    }
    if (type == "logic") {
      const bool* x = std::get_if<bool>(&a);
      const bool* y = std::get_if<bool>(&b);
      if (!x || !y)
        return Fail(id, op + " needs true or false");
      return op == "and" ? (*x && *y) : (*x || *y);
    }
    if (a.index() != b.index())
      return Fail(id, "cannot compare " + ValueText(a) + " with " +
                          ValueText(b));
    if (op == "=")
      return a == b;
    if (std::holds_alternative<bool>(a))
      return Fail(id, "cannot order true and false");
    return op == "<" ? a < b : b < a;
  }

  std::optional<Halt> Exec(const BlockId& id) {
    const Block& block = *ws_.FindBlock(id);
    const std::string& type = block.def_id;
    if (type != "print" && type != "set_var" && type != "repeat" &&
        type != "if")
      return Fail(id, type + " is not a statement");
    if (auto halt = Step())
      return halt;
    if (type == "print") {
      auto v = Input(block, "VALUE");
      if (auto* halt = std::get_if<Halt>(&v))
        return *halt;
      lines_.push_back(ValueText(std::get<Value>(v)));
      return std::nullopt;
    }
    if (type == "set_var") {
      auto v = Input(block, "VALUE");
      if (auto* halt = std::get_if<Halt>(&v))
        return *halt;
      env_[std::get<std::string>(block.field_values.at("VAR"))] =
          std::get<Value>(v);
      return std::nullopt;
    }
    if (type == "repeat") {
      auto v = Input(block, "TIMES");
      if (auto* halt = std::get_if<Halt>(&v))
        return *halt;
      const double* n = std::get_if<double>(&std::get<Value>(v));
      if (!n)
        return Fail(id, "repeat needs a number");
      double count = std::isnan(*n) || *n < 0 ? 0 : std::floor(*n);
      auto body = block.statement_slots.at("BODY");
      if (!body)
        return std::nullopt;
      for (double i = 0; i < count; ++i) {
        if (auto halt = RunSequence(body))
          return halt;
      }
      return std::nullopt;
    }
    auto v = Input(block, "COND");
    if (auto* halt = std::get_if<Halt>(&v))
      return *halt;
    const bool* cond = std::get_if<bool>(&std::get<Value>(v));
    if (!cond)
      return Fail(id, "if needs true or false");
    return RunSequence(block.statement_slots.at(*cond ? "DO" : "ELSE"));
  }

  const Workspace& ws_;
  long long limit_;
  long long steps_ = 0;
  Environment env_;
  std::vector<std::string> lines_;
};

}  // namespace

std::string ValueText(const Value& value) {
  if (const double* d = std::get_if<double>(&value))
    return FormatNumber(*d);
  if (const bool* b = std::get_if<bool>(&value))
    return *b ? "true" : "false";
  return std::get<std::string>(value);
}

std::string_view RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOk: return "ok";
    case RunStatus::kError: return "error";
    case RunStatus::kStepLimit: return "step-limit-exceeded";
  }
  return "unknown";
}

Output Run(const Workspace& ws, long long step_limit) {
  Interpreter interpreter(ws, step_limit);
  Output out;
  for (const auto& stack : ws.stacks()) {
    const BlockDefinition* def = ws.DefinitionOf(stack.top);
    if (!def || def->kind != BlockKind::kStatement)
      continue;
    if (auto halt = interpreter.RunSequence(stack.top)) {
      out.status = halt->status;
      out.message = halt->message;
      break;
    }
  }
  out.lines = std::move(interpreter.lines());
  out.steps = interpreter.steps();
  return out;
}

Result<Value> EvalValue(const Workspace& ws, const BlockId& id,
                        const Environment& env) {
  const BlockDefinition* def = ws.DefinitionOf(id);
  if (!def || def->kind != BlockKind::kValue)
    return MakeError(ErrorCode::kUnknownBlock, "no value block " + id);
  Interpreter interpreter(ws, kDefaultStepLimit, env);
  auto result = interpreter.Eval(id);
  if (auto* halt = std::get_if<Halt>(&result))
    return MakeError(ErrorCode::kRuntimeError, halt->message);
  return std::get<Value>(result);
}

}  // namespace eaf
