#ifndef EAF_WORKSPACE_H_
#define EAF_WORKSPACE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaf/block_set.h"
#include "eaf/status.h"

namespace eaf {

using BlockId = std::string;

struct Comment {
  std::string text;
  bool visible = true;

  bool operator==(const Comment&) const = default;
};

struct Block {
  BlockId id;
  std::string def_id;
  std::map<std::string, FieldValue> field_values;
  std::map<std::string, std::optional<BlockId>> value_slots;
  // Head of the nested statement sequence for each statement input.
  std::map<std::string, std::optional<BlockId>> statement_slots;
  std::optional<BlockId> next;
  std::optional<Comment> comment;

  bool operator==(const Block&) const = default;
};

struct Position {
  double x = 0;
  double y = 0;

  bool operator==(const Position&) const = default;
};

struct Stack {
  std::string label;
  std::optional<std::string> custom_name;
  Position position;
  BlockId top;

  bool operator==(const Stack&) const = default;
};

enum class LinkKind { kPrevious, kNext, kValueSlot, kStatementSlot };

// An attachment point on a block. |input| is empty for Previous/Next.
struct ConnectionRef {
  LinkKind kind = LinkKind::kNext;
  BlockId block;
  std::string input;

  static ConnectionRef Previous(BlockId b) { return {LinkKind::kPrevious, std::move(b), {}}; }
  static ConnectionRef Next(BlockId b) { return {LinkKind::kNext, std::move(b), {}}; }
  static ConnectionRef ValueSlot(BlockId b, std::string name) {
    return {LinkKind::kValueSlot, std::move(b), std::move(name)};
  }
  static ConnectionRef StatementSlot(BlockId b, std::string name) {
    return {LinkKind::kStatementSlot, std::move(b), std::move(name)};
  }

  bool operator==(const ConnectionRef&) const = default;
  auto operator<=>(const ConnectionRef&) const = default;
};

// How a non-root block hangs off its parent. kind is never kPrevious.
struct ParentLink {
  BlockId parent;
  LinkKind kind = LinkKind::kNext;
  std::string input;
};

enum class ElementKind { kField, kValueInput, kStatementInput };

// One navigation child of a block: a field, or a value/statement input with
// whatever is attached to it.
struct ElementRef {
  ElementKind kind = ElementKind::kField;
  std::string name;
  std::optional<BlockId> attached;

  bool empty_connection() const {
    return kind != ElementKind::kField && !attached.has_value();
  }
  bool operator==(const ElementRef&) const = default;
};

struct BlockNumber {
  std::string label;
  int number = 0;
  int total = 0;
};

// Per-block preorder numbering across all stacks.
using NumberingIndex = std::map<BlockId, BlockNumber>;

enum class ViolationKind {
  kUnknownDefinition,
  kFieldMismatch,
  kUnknownInput,
  kDanglingReference,
  kSharedChild,
  kKindMismatch,
  kTypeMismatch,
  kOrphan,
  kTopHasParent,
  kMissingTop,
  kDuplicateLabel,
  kBadLabel,
  kUnsortedStacks,
  kBadCustomName,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // Block id or stack label.
  std::string path;     // e.g. "blocks.b7.next".

  bool operator==(const Violation&) const = default;
};

class Workspace {
 public:
  explicit Workspace(const BlockSet* block_set = &StandardBlockSet());

  const BlockSet& block_set() const { return *block_set_; }
  const std::map<BlockId, Block>& blocks() const { return blocks_; }
  const std::vector<Stack>& stacks() const { return stacks_; }
  const NumberingIndex& numbering() const { return numbering_; }
  bool empty() const { return stacks_.empty(); }

  const Block* FindBlock(std::string_view id) const;
  const BlockDefinition* DefinitionOf(std::string_view id) const;
  const Stack* FindStack(std::string_view label) const;
  // Stack whose tree contains |id|.
  const Stack* StackOf(std::string_view id) const;
  std::optional<ParentLink> ParentOf(std::string_view id) const;
  bool IsStackTop(std::string_view id) const;
  // Last block of the next-chain starting at |id|.
  BlockId ChainTail(const BlockId& id) const;
  // Preorder predecessor/successor in the statement sequence.
  std::optional<BlockId> Predecessor(std::string_view id) const;
  std::optional<BlockId> Successor(std::string_view id) const;
  // Block ids nested under |id| (value slots and statement bodies, but not
  // its own next-chain), including |id| itself, in preorder.
  std::vector<BlockId> Subtree(const BlockId& id) const;

  // Creates a detached single-block stack. Missing fields take defaults.
  Result<BlockId> NewBlock(std::string_view def_id,
                           const std::map<std::string, FieldValue>& fields = {},
                           Position position = {});
  // Splices the stack topped by |block| in at |at|; the absorbed stack's
  // label is retired.
  Status Connect(const ConnectionRef& at, const BlockId& block);
  // Pulls |block| out of its parent as a new stack offset (+40,+40) from
  // the source stack. With |heal| the successor chain stays behind and
  // reattaches to the predecessor; without it the tail travels along.
  // Detaching a stack top is a no-op returning the same id.
  Result<BlockId> Detach(const BlockId& block, bool heal);
  // Removes the whole tree of the stack topped by |top|.
  Status RemoveStack(const BlockId& top);
  // Removes |block| and its nested children, healing the chain. A stack top
  // with a successor hands the stack to the successor.
  Status DeleteBlock(const BlockId& block);
  Status SetField(const BlockId& block, std::string_view name,
                  FieldValue value);
  Status SetComment(const BlockId& block, std::optional<Comment> comment);
  Status SetCustomName(std::string_view label, std::string name);

  BlockId NextBlockId();

  // Unchecked access used by the file loader and by tests that construct
  // deliberately broken workspaces. Call Reindex() afterwards.
  std::map<BlockId, Block>& mutable_blocks() { return blocks_; }
  std::vector<Stack>& mutable_stacks() { return stacks_; }
  // Recomputes the parent index, numbering and id counter. Tolerates
  // invalid shapes.
  void Reindex();

 private:
  Block* MutableBlock(std::string_view id);
  Stack* MutableStackByTop(std::string_view top);
  void SortStacks();

  const BlockSet* block_set_;
  std::map<BlockId, Block> blocks_;
  std::vector<Stack> stacks_;
  std::map<BlockId, ParentLink> parents_;
  std::map<BlockId, std::string> stack_of_;
  NumberingIndex numbering_;
  long long next_serial_ = 1;
};

// Canonical navigation children of |block|: fields, then value inputs, then
// statement inputs, each in definition order.
std::vector<ElementRef> Children(const Workspace& ws, std::string_view block);

// Document-order traversal of one stack.
Result<std::vector<BlockId>> Preorder(const Workspace& ws,
                                      std::string_view label);

// Empty iff every structural invariant holds.
std::vector<Violation> Validate(const Workspace& ws);

// The connection an element exposes (value or statement input only).
std::optional<ConnectionRef> ConnectionOf(std::string_view block,
                                          const ElementRef& element);

}  // namespace eaf

#endif  // EAF_WORKSPACE_H_
