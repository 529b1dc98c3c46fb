#include "eaf/labeling.h"

#include <algorithm>
#include <set>

namespace eaf {

std::string LabelForIndex(size_t index) {
  std::string out;
  size_t n = index + 1;
  while (n > 0) {
    size_t rem = (n - 1) % 26;
    out.insert(out.begin(), static_cast<char>('A' + rem));
    n = (n - 1) / 26;
  }
  return out;
}

std::optional<size_t> LabelIndex(std::string_view label) {
  if (label.empty() || label.size() > 6)
    return std::nullopt;
  size_t n = 0;
  for (char c : label) {
    if (c < 'A' || c > 'Z')
      return std::nullopt;
    n = n * 26 + static_cast<size_t>(c - 'A' + 1);
  }
  return n - 1;
}

bool IsValidLabel(std::string_view label) {
  return LabelIndex(label).has_value();
}

bool LabelLess(std::string_view a, std::string_view b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::string AssignLabel(const Workspace& ws) {
  std::set<size_t> used;
  for (const auto& stack : ws.stacks()) {
    if (auto index = LabelIndex(stack.label))
      used.insert(*index);
  }
  size_t candidate = 0;
  while (used.count(candidate))
    ++candidate;
  return LabelForIndex(candidate);
}

namespace {

std::string_view Trim(std::string_view text) {
  const char* kSpace = " \t\r\n";
  size_t first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos)
    return {};
  size_t last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

}  // namespace

Status SetCustomName(Workspace& ws, std::string_view label,
                     std::string_view name) {
  if (!ws.FindStack(label))
    return MakeError(ErrorCode::kUnknownStack,
                     "no stack " + std::string(label));
  std::string_view trimmed = Trim(name);
  if (trimmed.empty())
    return MakeError(ErrorCode::kInvalidName, "stack name is empty");
  if (trimmed.size() > kMaxCustomNameLength)
    return MakeError(ErrorCode::kInvalidName,
                     "stack name is longer than 60 characters");
  return ws.SetCustomName(label, std::string(trimmed));
}

NumberingIndex Renumber(const Workspace& ws) {
  NumberingIndex index;
  for (const auto& stack : ws.stacks()) {
    auto order = Preorder(ws, stack.label);
    if (!order.ok())
      continue;
    int total = static_cast<int>(order->size());
    int number = 0;
    for (const auto& id : *order)
      index.emplace(id, BlockNumber{stack.label, ++number, total});
  }
  return index;
}

Result<BlockId> Resolve(const Workspace& ws, std::string_view label,
                        int number) {
  auto order = Preorder(ws, label);
  if (!order.ok())
    return order.error();
  if (number < 1 || number > static_cast<int>(order->size())) {
    return MakeError(ErrorCode::kNumberOutOfRange,
                     "stack " + std::string(label) + " has " +
                         std::to_string(order->size()) + " blocks");
  }
  return (*order)[static_cast<size_t>(number - 1)];
}

std::string StackReference(const Stack& stack) {
  std::string out = "Stack " + stack.label;
  if (stack.custom_name)
    out += ", \"" + *stack.custom_name + "\"";
  return out;
}

}  // namespace eaf
