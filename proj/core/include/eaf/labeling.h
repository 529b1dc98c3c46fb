#ifndef EAF_LABELING_H_
#define EAF_LABELING_H_

#include <optional>
#include <string>
#include <string_view>

#include "eaf/status.h"
#include "eaf/workspace.h"

namespace eaf {

inline constexpr size_t kMaxCustomNameLength = 60;

// Letter sequence A..Z, AA, AB, ... for a zero-based index.
std::string LabelForIndex(size_t index);
// Inverse of LabelForIndex; nullopt for anything that is not upper-case
// letters.
std::optional<size_t> LabelIndex(std::string_view label);
bool IsValidLabel(std::string_view label);
// Sequence order: shorter labels first, then alphabetical.
bool LabelLess(std::string_view a, std::string_view b);

// Lowest letter sequence not used by any stack in |ws|.
std::string AssignLabel(const Workspace& ws);

// Trims |name|; fails with kInvalidName when empty or over 60 characters.
Status SetCustomName(Workspace& ws, std::string_view label,
                     std::string_view name);

NumberingIndex Renumber(const Workspace& ws);

// Block at 1-based preorder |number| of stack |label|.
Result<BlockId> Resolve(const Workspace& ws, std::string_view label,
                        int number);

// "Stack A" or "Stack A, \"main loop\"".
std::string StackReference(const Stack& stack);

}  // namespace eaf

#endif  // EAF_LABELING_H_
