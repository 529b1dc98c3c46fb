#ifndef EAF_BLOCK_SET_H_
#define EAF_BLOCK_SET_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eaf/status.h"

namespace eaf {

enum class ValueType { kNumber, kText, kBoolean, kAny };

std::string_view ValueTypeName(ValueType type);

// Connection-level type check: equal types, or either side is Any.
bool Compatible(ValueType a, ValueType b);

enum class BlockKind { kStatement, kValue };

enum class FieldKind { kNumber, kText, kChoice };

// Scalar stored in a field: double for number fields, string otherwise.
using FieldValue = std::variant<double, std::string>;

std::string FormatNumber(double value);
std::string FieldValueText(const FieldValue& value);

struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::kText;
  std::vector<std::string> options;  // kChoice only.
  FieldValue default_value;
  std::string display;  // Spoken name, e.g. "operator".
};

struct ValueInputSpec {
  std::string name;
  ValueType accepted = ValueType::kAny;
  std::string display;
};

struct StatementInputSpec {
  std::string name;
  std::string display;
};

struct BlockDefinition {
  std::string def_id;
  BlockKind kind = BlockKind::kStatement;
  std::vector<FieldSpec> fields;
  std::vector<ValueInputSpec> value_inputs;
  std::vector<StatementInputSpec> statement_inputs;
  std::optional<ValueType> value_output;
  bool has_previous = true;
  bool has_next = true;

  // Presentation. |label| names the block ("repeat"). |phrase| is a pattern
  // over field and value-input names, e.g. "repeat {TIMES}"; value blocks
  // use it for their inline rendering inside other blocks. |suffix| is the
  // trailing word added at standard verbosity ("times").
  std::string label;
  std::string phrase;
  std::string suffix;

  const FieldSpec* FindField(std::string_view name) const;
  const ValueInputSpec* FindValueInput(std::string_view name) const;
  const StatementInputSpec* FindStatementInput(std::string_view name) const;
  // Number of navigation children: fields + value inputs + statement inputs.
  size_t ChildCount() const;
};

// Validates |value| against |spec|; numbers must be finite, choices must name
// an option. Text values are accepted as-is.
Status CheckFieldValue(const FieldSpec& spec, const FieldValue& value);

// Parses user-typed text into a value for |spec|.
Result<FieldValue> ParseFieldValue(const FieldSpec& spec,
                                   std::string_view text);

class BlockSet {
 public:
  BlockSet() = default;

  // Fails with kSchemaViolation on duplicate ids or a definition breaking the
  // statement/value shape rules.
  Status Add(BlockDefinition def);

  const BlockDefinition* Find(std::string_view def_id) const;
  // Definitions in insertion order.
  const std::vector<BlockDefinition>& definitions() const { return defs_; }

 private:
  std::vector<BlockDefinition> defs_;
};

// print, set_var, var_get, repeat, if, number, text, boolean, arithmetic,
// compare, logic, not.
const BlockSet& StandardBlockSet();

struct ToolboxCategory {
  std::string name;
  std::vector<std::string> def_ids;
};

const std::vector<ToolboxCategory>& StandardToolboxCategories();

}  // namespace eaf

#endif  // EAF_BLOCK_SET_H_
