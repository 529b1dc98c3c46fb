#include "eaf/serialization.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>

#include <openssl/evp.h>

#include "eaf/labeling.h"

namespace eaf {

using nlohmann::json;

namespace {

json NumberJson(double value) {
  if (std::isfinite(value) && std::trunc(value) == value &&
      std::fabs(value) < 9.0e15) {
    return static_cast<int64_t>(value);
  }
  return value;
}

json FieldJson(const FieldValue& value) {
  if (const double* number = std::get_if<double>(&value))
    return NumberJson(*number);
  return std::get<std::string>(value);
}

json BlockJson(const Workspace& ws, const BlockId& id, bool with_next,
               size_t depth = 0) {
  const Block* block = ws.FindBlock(id);
  if (!block || depth > ws.blocks().size())
    return nullptr;
  json out = json::object();
  out["id"] = block->id;
  out["type"] = block->def_id;
  json fields = json::object();
  for (const auto& [name, value] : block->field_values)
    fields[name] = FieldJson(value);
  out["fields"] = fields;
  json inputs = json::object();
  auto child = [&](const std::optional<BlockId>& c, bool chain) -> json {
    return c ? BlockJson(ws, *c, chain, depth + 1) : json(nullptr);
  };
  for (const auto& [name, slot] : block->value_slots)
    inputs[name] = json{{"block", child(slot, false)}};
  for (const auto& [name, slot] : block->statement_slots)
    inputs[name] = json{{"block", child(slot, true)}};
  out["inputs"] = inputs;
  out["next"] = with_next ? child(block->next, true) : json(nullptr);
  if (block->comment) {
    out["comment"] = json{{"text", block->comment->text},
                          {"visible", block->comment->visible}};
  } else {
    out["comment"] = nullptr;
  }
  return out;
}

Error Schema(const std::string& path, const std::string& reason) {
  return Error{ErrorCode::kSchemaViolation, path + ": " + reason};
}

// Builds blocks from nested JSON into a workspace's block table.
class BlockReader {
 public:
  BlockReader(Workspace& ws, std::function<BlockId(const std::string&)> rename)
      : ws_(ws), rename_(std::move(rename)) {}

  Result<BlockId> Read(const json& j, const std::string& path) {
    if (!j.is_object())
      return Schema(path, "block must be an object");
    auto id_it = j.find("id");
    if (id_it == j.end() || !id_it->is_string() ||
        id_it->get<std::string>().empty())
      return Schema(path + ".id", "missing block id");
    BlockId id = rename_(id_it->get<std::string>());
    if (!seen_.insert(id).second || ws_.blocks().count(id))
      return Schema("blocks." + id, "duplicate block id");
    auto type_it = j.find("type");
    if (type_it == j.end() || !type_it->is_string())
      return Schema(path + ".type", "missing block type");
    const BlockDefinition* def =
        ws_.block_set().Find(type_it->get<std::string>());
    if (!def)
      return Schema(path + ".type",
                    "unknown block type " + type_it->get<std::string>());

    Block block;
    block.id = id;
    block.def_id = def->def_id;
    for (auto it = j.begin(); it != j.end(); ++it) {
      static const std::set<std::string> kKeys = {"id",     "type", "fields",
                                                  "inputs", "next", "comment"};
      if (!kKeys.count(it.key()))
        return Schema(path + "." + it.key(), "unknown member");
    }

    json fields = j.value("fields", json::object());
    if (!fields.is_object())
      return Schema(path + ".fields", "must be an object");
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      if (!def->FindField(it.key()))
        return Schema(path + ".fields." + it.key(), "unknown field");
    }
    for (const auto& spec : def->fields) {
      std::string field_path = path + ".fields." + spec.name;
      auto it = fields.find(spec.name);
      FieldValue value = spec.default_value;
      if (it != fields.end()) {
        if (spec.kind == FieldKind::kNumber) {
          if (!it->is_number())
            return Schema(field_path, "expected a number");
          value = it->get<double>();
        } else {
          if (!it->is_string())
            return Schema(field_path, "expected a string");
          value = it->get<std::string>();
        }
      }
      Status ok = CheckFieldValue(spec, value);
      if (!ok.ok())
        return Schema(field_path, ok.error().detail);
      block.field_values[spec.name] = std::move(value);
    }

    json inputs = j.value("inputs", json::object());
    if (!inputs.is_object())
      return Schema(path + ".inputs", "must be an object");
    for (auto it = inputs.begin(); it != inputs.end(); ++it) {
      if (!def->FindValueInput(it.key()) && !def->FindStatementInput(it.key()))
        return Schema(path + ".inputs." + it.key(), "unknown input");
    }
    auto read_input = [&](const std::string& name)
        -> Result<std::optional<BlockId>> {
      auto it = inputs.find(name);
      if (it == inputs.end())
        return std::optional<BlockId>();
      std::string input_path = path + ".inputs." + name;
      if (!it->is_object())
        return Schema(input_path, "input must be an object");
      return Child(it->value("block", json(nullptr)), input_path + ".block");
    };
    for (const auto& input : def->value_inputs) {
      auto child = read_input(input.name);
      if (!child.ok())
        return child.error();
      block.value_slots[input.name] = *child;
    }
    for (const auto& input : def->statement_inputs) {
      auto child = read_input(input.name);
      if (!child.ok())
        return child.error();
      block.statement_slots[input.name] = *child;
    }

    auto next = Child(j.value("next", json(nullptr)), path + ".next");
    if (!next.ok())
      return next.error();
    block.next = *next;

    json comment = j.value("comment", json(nullptr));
    if (!comment.is_null()) {
      if (!comment.is_object() || !comment.contains("text") ||
          !comment["text"].is_string())
        return Schema(path + ".comment", "comment needs a text string");
      bool visible = true;
      if (comment.contains("visible")) {
        if (!comment["visible"].is_boolean())
          return Schema(path + ".comment.visible", "expected a boolean");
        visible = comment["visible"].get<bool>();
      }
      block.comment = Comment{comment["text"].get<std::string>(), visible};
    }
    ws_.mutable_blocks().emplace(id, std::move(block));
    return id;
  }

 private:
  // A child is an embedded block, null, or an id reference resolved later.
  Result<std::optional<BlockId>> Child(const json& j, const std::string& path) {
    if (j.is_null())
      return std::optional<BlockId>();
    if (j.is_string())
      return std::optional<BlockId>(rename_(j.get<std::string>()));
    auto id = Read(j, path);
    if (!id.ok())
      return id.error();
    return std::optional<BlockId>(*id);
  }

  Workspace& ws_;
  std::function<BlockId(const std::string&)> rename_;
  std::set<BlockId> seen_;
};

void SortByLabel(std::vector<Stack>& stacks) {
  std::stable_sort(stacks.begin(), stacks.end(),
                   [](const Stack& a, const Stack& b) {
                     return LabelLess(a.label, b.label);
                   });
}

void CollectIds(const json& j, std::vector<std::string>& out, size_t depth) {
  if (depth > 10000)
    return;
  if (j.is_object()) {
    if (j.contains("id") && j["id"].is_string() && j.contains("type"))
      out.push_back(j["id"].get<std::string>());
    for (const auto& item : j) CollectIds(item, out, depth + 1);
  } else if (j.is_array()) {
    for (const auto& item : j) CollectIds(item, out, depth + 1);
  }
}

}  // namespace

json SubtreeToJson(const Workspace& ws, const BlockId& id) {
  return BlockJson(ws, id, false);
}

std::string SaveWorkspace(const Workspace& ws) {
  json stacks = json::array();
  std::vector<Stack> ordered = ws.stacks();
  SortByLabel(ordered);
  for (const auto& stack : ordered) {
    json s = json::object();
    s["label"] = stack.label;
    s["custom_name"] =
        stack.custom_name ? json(*stack.custom_name) : json(nullptr);
    s["x"] = NumberJson(stack.position.x);
    s["y"] = NumberJson(stack.position.y);
    s["block"] = BlockJson(ws, stack.top, true);
    stacks.push_back(std::move(s));
  }
  json doc = {{"version", kFormatVersion}, {"stacks", stacks}};
  return doc.dump(2) + "\n";
}

Result<Workspace> LoadWorkspace(std::string_view text,
                                const BlockSet* block_set) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    size_t line = 1 + static_cast<size_t>(
                          std::count(text.begin(), text.begin() + end, '\n'));
    std::string reason = e.what();
    if (auto colon = reason.rfind(": "); colon != std::string::npos)
      reason = reason.substr(colon + 2);
    return MakeError(ErrorCode::kParseError,
                     "line " + std::to_string(line) + ": " + reason);
  }
  if (!doc.is_object())
    return Schema("$", "document must be an object");
  if (!doc.contains("version") || doc["version"] != kFormatVersion)
    return Schema("version", "expected version 1");
  if (!doc.contains("stacks") || !doc["stacks"].is_array())
    return Schema("stacks", "expected an array");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "version" && it.key() != "stacks")
      return Schema(it.key(), "unknown member");
  }

  Workspace ws(block_set);
  BlockReader reader(ws, [](const std::string& id) { return id; });
  const json& stacks = doc["stacks"];
  for (size_t i = 0; i < stacks.size(); ++i) {
    std::string path = "stacks[" + std::to_string(i) + "]";
    const json& s = stacks[i];
    if (!s.is_object())
      return Schema(path, "stack must be an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
      static const std::set<std::string> kKeys = {"label", "custom_name", "x",
                                                  "y", "block"};
      if (!kKeys.count(it.key()))
        return Schema(path + "." + it.key(), "unknown member");
    }
    Stack stack;
    if (!s.contains("label") || !s["label"].is_string())
      return Schema(path + ".label", "missing label");
    stack.label = s["label"].get<std::string>();
    json name = s.value("custom_name", json(nullptr));
    if (!name.is_null()) {
      if (!name.is_string())
        return Schema(path + ".custom_name", "expected a string or null");
      stack.custom_name = name.get<std::string>();
    }
    for (const char* axis : {"x", "y"}) {
      if (!s.contains(axis) || !s[axis].is_number())
        return Schema(path + "." + axis, "expected a number");
    }
    stack.position = Position{s["x"].get<double>(), s["y"].get<double>()};
    if (!s.contains("block") || !s["block"].is_object())
      return Schema(path + ".block", "stack needs a top block");
    auto top = reader.Read(s["block"], path + ".block");
    if (!top.ok())
      return top.error();
    stack.top = *top;
    ws.mutable_stacks().push_back(std::move(stack));
  }
  SortByLabel(ws.mutable_stacks());
  ws.Reindex();
  std::vector<Violation> violations = Validate(ws);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    return Schema(v.path, std::string(ViolationKindName(v.kind)));
  }
  return ws;
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string StateHash(const Workspace& ws) {
  return Sha256Hex(SaveWorkspace(ws));
}

Result<BlockId> InstantiateSubtree(Workspace& ws, const json& subtree,
                                   Position position, bool fresh_ids) {
  std::vector<std::string> ids;
  CollectIds(subtree, ids, 0);
  bool regenerate = fresh_ids;
  for (const auto& id : ids) {
    if (ws.blocks().count(id))
      regenerate = true;
  }
  std::map<std::string, BlockId> renamed;
  if (regenerate) {
    for (const auto& id : ids) renamed.emplace(id, ws.NextBlockId());
  }
  Workspace staged = ws;
  BlockReader reader(staged, [&](const std::string& id) {
    auto it = renamed.find(id);
    return it == renamed.end() ? id : it->second;
  });
  auto top = reader.Read(subtree, "clipboard");
  if (!top.ok())
    return top.error();
  Stack stack{AssignLabel(staged), std::nullopt, position, *top};
  staged.mutable_stacks().push_back(std::move(stack));
  SortByLabel(staged.mutable_stacks());
  staged.Reindex();
  std::vector<Violation> violations = Validate(staged);
  if (!violations.empty())
    return Schema(violations.front().path,
                  std::string(ViolationKindName(violations.front().kind)));
  BlockId id = *top;
  ws = std::move(staged);
  return id;
}

}  // namespace eaf
