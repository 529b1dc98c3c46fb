#include "eaf/block_set.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace eaf {

std::string_view ValueTypeName(ValueType type) {
  switch (type) {
    case ValueType::kNumber: return "Number";
    case ValueType::kText: return "Text";
    case ValueType::kBoolean: return "Boolean";
    case ValueType::kAny: return "Any";
  }
  return "Any";
}

bool Compatible(ValueType a, ValueType b) {
  return a == b || a == ValueType::kAny || b == ValueType::kAny;
}

std::string FormatNumber(double value) {
  if (std::isfinite(value) && std::floor(value) == value &&
      std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc())
    return "nan";
  return std::string(buf, end);
}

std::string FieldValueText(const FieldValue& value) {
  if (const double* number = std::get_if<double>(&value))
    return FormatNumber(*number);
  return std::get<std::string>(value);
}

const FieldSpec* BlockDefinition::FindField(std::string_view name) const {
  for (const auto& field : fields) {
    if (field.name == name)
      return &field;
  }
  return nullptr;
}

const ValueInputSpec* BlockDefinition::FindValueInput(
    std::string_view name) const {
  for (const auto& input : value_inputs) {
    if (input.name == name)
      return &input;
  }
  return nullptr;
}

const StatementInputSpec* BlockDefinition::FindStatementInput(
    std::string_view name) const {
  for (const auto& input : statement_inputs) {
    if (input.name == name)
      return &input;
  }
  return nullptr;
}

size_t BlockDefinition::ChildCount() const {
  return fields.size() + value_inputs.size() + statement_inputs.size();
}

Status CheckFieldValue(const FieldSpec& spec, const FieldValue& value) {
  switch (spec.kind) {
    case FieldKind::kNumber: {
      const double* number = std::get_if<double>(&value);
      if (!number || !std::isfinite(*number))
        return MakeError(ErrorCode::kBadFieldValue, spec.name);
      return Status::Ok();
    }
    case FieldKind::kText:
      if (!std::holds_alternative<std::string>(value))
        return MakeError(ErrorCode::kBadFieldValue, spec.name);
      return Status::Ok();
    case FieldKind::kChoice: {
      const std::string* text = std::get_if<std::string>(&value);
      if (!text || std::find(spec.options.begin(), spec.options.end(),
                             *text) == spec.options.end()) {
        return MakeError(ErrorCode::kBadFieldValue, spec.name);
      }
      return Status::Ok();
    }
  }
  return MakeError(ErrorCode::kBadFieldValue, spec.name);
}

namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

Result<FieldValue> ParseFieldValue(const FieldSpec& spec,
                                   std::string_view text) {
  switch (spec.kind) {
    case FieldKind::kNumber: {
      double parsed = 0;
      const char* first = text.data();
      const char* last = text.data() + text.size();
      if (!text.empty() && *first == '+')
        ++first;
      auto [ptr, ec] = std::from_chars(first, last, parsed);
      if (text.empty() || ec != std::errc() || ptr != last ||
          !std::isfinite(parsed)) {
        return MakeError(ErrorCode::kBadFieldValue,
                         spec.display + " must be a number");
      }
      return FieldValue(parsed);
    }
    case FieldKind::kText:
      return FieldValue(std::string(text));
    case FieldKind::kChoice: {
      std::string wanted = Lower(text);
      for (const auto& option : spec.options) {
        if (Lower(option) == wanted)
          return FieldValue(option);
      }
      std::string choices;
      for (const auto& option : spec.options) {
        if (!choices.empty())
          choices += ", ";
        choices += option;
      }
      return MakeError(ErrorCode::kBadFieldValue,
                       spec.display + " must be one of " + choices);
    }
  }
  return MakeError(ErrorCode::kBadFieldValue, spec.name);
}

Status BlockSet::Add(BlockDefinition def) {
  if (Find(def.def_id))
    return MakeError(ErrorCode::kSchemaViolation, "duplicate " + def.def_id);
  bool is_value = def.kind == BlockKind::kValue;
  if (is_value != def.value_output.has_value() ||
      (is_value && (def.has_previous || def.has_next))) {
    return MakeError(ErrorCode::kSchemaViolation, "shape " + def.def_id);
  }
  std::set<std::string> names;
  for (const auto& f : def.fields) names.insert(f.name);
  for (const auto& v : def.value_inputs) names.insert(v.name);
  for (const auto& s : def.statement_inputs) names.insert(s.name);
  if (names.size() != def.ChildCount())
    return MakeError(ErrorCode::kSchemaViolation, "names " + def.def_id);
  for (const auto& f : def.fields) {
    Status status = CheckFieldValue(f, f.default_value);
    if (!status.ok())
      return MakeError(ErrorCode::kSchemaViolation, "default " + f.name);
  }
  defs_.push_back(std::move(def));
  return Status::Ok();
}

const BlockDefinition* BlockSet::Find(std::string_view def_id) const {
  for (const auto& def : defs_) {
    if (def.def_id == def_id)
      return &def;
  }
  return nullptr;
}

namespace {

BlockDefinition Statement(std::string id, std::string phrase) {
  BlockDefinition def;
  def.def_id = id;
  def.label = std::move(id);
  def.kind = BlockKind::kStatement;
  def.phrase = std::move(phrase);
  return def;
}

BlockDefinition Value(std::string id, ValueType output, std::string label,
                      std::string phrase) {
  BlockDefinition def;
  def.def_id = std::move(id);
  def.label = std::move(label);
  def.kind = BlockKind::kValue;
  def.value_output = output;
  def.has_previous = false;
  def.has_next = false;
  def.phrase = std::move(phrase);
  return def;
}

FieldSpec Choice(std::string name, std::vector<std::string> options,
                 std::string display) {
  FieldSpec spec{std::move(name), FieldKind::kChoice, std::move(options), {},
                 std::move(display)};
  spec.default_value = spec.options.front();
  return spec;
}

BlockSet BuildStandardSet() {
  BlockSet set;
  std::vector<BlockDefinition> defs;

  auto print = Statement("print", "print {VALUE}");
  print.value_inputs = {{"VALUE", ValueType::kAny, "value"}};
  defs.push_back(print);

  auto set_var = Statement("set_var", "set {VAR} to {VALUE}");
  set_var.label = "set";
  set_var.fields = {{"VAR", FieldKind::kText, {}, std::string("x"),
                     "variable name"}};
  set_var.value_inputs = {{"VALUE", ValueType::kAny, "value"}};
  defs.push_back(set_var);

  auto repeat = Statement("repeat", "repeat {TIMES}");
  repeat.suffix = "times";
  repeat.value_inputs = {{"TIMES", ValueType::kNumber, "times"}};
  repeat.statement_inputs = {{"BODY", "body"}};
  defs.push_back(repeat);

  auto if_block = Statement("if", "if {COND}");
  if_block.suffix = "then";
  if_block.value_inputs = {{"COND", ValueType::kBoolean, "condition"}};
  if_block.statement_inputs = {{"DO", "do"}, {"ELSE", "else"}};
  defs.push_back(if_block);

  auto number = Value("number", ValueType::kNumber, "number", "{VALUE}");
  number.fields = {{"VALUE", FieldKind::kNumber, {}, 0.0, "value"}};
  defs.push_back(number);

  auto text = Value("text", ValueType::kText, "text", "{VALUE}");
  text.fields = {{"VALUE", FieldKind::kText, {}, std::string(), "value"}};
  defs.push_back(text);

  auto boolean = Value("boolean", ValueType::kBoolean, "boolean", "{VALUE}");
  boolean.fields = {Choice("VALUE", {"true", "false"}, "value")};
  defs.push_back(boolean);

  auto var_get = Value("var_get", ValueType::kAny, "variable", "{VAR}");
  var_get.fields = {{"VAR", FieldKind::kText, {}, std::string("x"),
                     "variable name"}};
  defs.push_back(var_get);

  auto arithmetic =
      Value("arithmetic", ValueType::kNumber, "arithmetic", "{A} {OP} {B}");
  arithmetic.fields = {Choice("OP", {"+", "-", "*", "/"}, "operator")};
  arithmetic.value_inputs = {{"A", ValueType::kNumber, "left operand"},
                             {"B", ValueType::kNumber, "right operand"}};
  defs.push_back(arithmetic);

  auto compare = Value("compare", ValueType::kBoolean, "compare",
                       "{A} {OP} {B}");
  compare.fields = {Choice("OP", {"<", "=", ">"}, "operator")};
  compare.value_inputs = {{"A", ValueType::kAny, "left operand"},
                          {"B", ValueType::kAny, "right operand"}};
  defs.push_back(compare);

  auto logic = Value("logic", ValueType::kBoolean, "logic", "{A} {OP} {B}");
  logic.fields = {Choice("OP", {"and", "or"}, "operator")};
  logic.value_inputs = {{"A", ValueType::kBoolean, "left operand"},
                        {"B", ValueType::kBoolean, "right operand"}};
  defs.push_back(logic);

  auto not_block = Value("not", ValueType::kBoolean, "not", "not {A}");
  not_block.value_inputs = {{"A", ValueType::kBoolean, "operand"}};
  defs.push_back(not_block);

  for (auto& def : defs) {
    Status status = set.Add(std::move(def));
    (void)status;
  }
  return set;
}

}  // namespace

const BlockSet& StandardBlockSet() {
  static const BlockSet* set = new BlockSet(BuildStandardSet());
  return *set;
}

const std::vector<ToolboxCategory>& StandardToolboxCategories() {
  static const auto* categories = new std::vector<ToolboxCategory>{
      {"Control", {"repeat", "if"}},
      {"Logic", {"compare", "logic", "not", "boolean"}},
      {"Math", {"number", "arithmetic"}},
      {"Text", {"print", "text"}},
      {"Variables", {"set_var", "var_get"}},
  };
  return *categories;
}

}  // namespace eaf
