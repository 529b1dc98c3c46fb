#ifndef EAF_SERIALIZATION_H_
#define EAF_SERIALIZATION_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eaf/status.h"
#include "eaf/workspace.h"

namespace eaf {

inline constexpr int kFormatVersion = 1;

// Parses a .bws.json document. Syntax errors are kParseError with
// "line N: reason"; structural problems are kSchemaViolation whose detail
// starts with the offending path ("stacks[0].block.type",
// "blocks.b7.next").
Result<Workspace> LoadWorkspace(std::string_view text,
                                const BlockSet* block_set = &StandardBlockSet());

// Canonical text: sorted keys, stacks in label order, two-space indent, LF
// line endings and a trailing newline.
std::string SaveWorkspace(const Workspace& ws);

// Hex SHA-256 of SaveWorkspace(ws).
std::string StateHash(const Workspace& ws);
std::string Sha256Hex(std::string_view data);

// One block and everything nested in it, without its next chain.
nlohmann::json SubtreeToJson(const Workspace& ws, const BlockId& id);

// Adds |subtree| as a new stack at |position| and returns its top block.
// Ids are kept unless |fresh_ids| is set or one of them is already taken.
Result<BlockId> InstantiateSubtree(Workspace& ws, const nlohmann::json& subtree,
                                   Position position, bool fresh_ids);

}  // namespace eaf

#endif  // EAF_SERIALIZATION_H_
