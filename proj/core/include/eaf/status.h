#ifndef EAF_STATUS_H_
#define EAF_STATUS_H_

#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace eaf {

enum class ErrorCode {
  kUnknownDefinition,
  kBadFieldValue,
  kIncompatibleConnection,
  kOccupiedValueSlot,
  kWouldCreateCycle,
  kUnknownBlock,
  kUnknownStack,
  kInvalidName,
  kNumberOutOfRange,
  kAccessibilityDisabled,
  kNoSelection,
  kNotInEditMode,
  kEmptyClipboard,
  kAlreadyDetached,
  kToolboxEmptyForContext,
  kToolboxNotOpen,
  kToolboxOpen,
  kFieldEditActive,
  kNoOutput,
  kBadChord,
  kUnknownCommand,
  kReservedChord,
  kDuplicateBinding,
  kParseError,
  kSchemaViolation,
  kScriptParseError,
  kRuntimeError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Domain failure. |detail| is human-readable and is what gets announced.
struct Error {
  ErrorCode code;
  std::string detail;

  bool operator==(const Error&) const = default;
};

// Value-or-error. Engine code never throws for domain failures; callers
// branch on ok().
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : storage_(std::move(value)) {}  // NOLINT: implicit
  Result(Error error) : storage_(std::move(error)) {}  // NOLINT: implicit

  bool ok() const { return storage_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() & { return std::get<0>(storage_); }
  const T& value() const& { return std::get<0>(storage_); }
  T&& value() && { return std::get<0>(std::move(storage_)); }
  const Error& error() const { return std::get<1>(storage_); }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

 private:
  std::variant<T, Error> storage_;
};

class [[nodiscard]] Status {
 public:
  Status() = default;
  Status(Error error) : error_(std::move(error)), ok_(false) {}  // NOLINT

  static Status Ok() { return Status(); }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const Error& error() const { return error_; }

 private:
  Error error_{ErrorCode::kParseError, {}};
  bool ok_ = true;
};

inline Error MakeError(ErrorCode code, std::string detail) {
  return Error{code, std::move(detail)};
}

}  // namespace eaf

#endif  // EAF_STATUS_H_
