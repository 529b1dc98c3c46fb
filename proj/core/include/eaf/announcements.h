#ifndef EAF_ANNOUNCEMENTS_H_
#define EAF_ANNOUNCEMENTS_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaf/status.h"
#include "eaf/workspace.h"

namespace eaf {

enum class Politeness { kPolite, kAssertive };
enum class Category { kNavigation, kMode, kEdit, kError, kHelp, kSystem };
enum class Verbosity { kTerse, kStandard, kVerbose };

std::string_view PolitenessName(Politeness politeness);
std::string_view CategoryName(Category category);
std::string_view VerbosityName(Verbosity verbosity);
std::optional<Verbosity> ParseVerbosity(std::string_view text);

// Screen-reader text destined for a live region.
struct Announcement {
  std::string text;
  Politeness politeness = Politeness::kPolite;
  Category category = Category::kSystem;

  bool operator==(const Announcement&) const = default;
};

// Every engine occurrence that produces speech. Keep kEventKindCount last.
enum class EventKind {
  kMovedToBlock,
  kMovedToElement,
  kMovedToStack,
  kMovedToWorkspace,
  kMovedToToolboxEntry,
  kBoundary,
  kStackMissing,
  kLocate,
  kAssistantPreview,
  kAssistantOn,
  kAssistantOff,
  kShortcutsList,
  kShortcutsClosed,
  kModeEdit,
  kModeNavigation,
  kFieldEditStarted,
  kFieldInput,
  kFieldCommitted,
  kFieldCancelled,
  kCut,
  kCopied,
  kPasted,
  kDeleted,
  kDisconnected,
  kCommentAdded,
  kCommentHidden,
  kCommentShown,
  kInserted,
  kStackCreated,
  kStackRetired,
  kStackRenamed,
  kToolboxOpened,
  kToolboxFiltered,
  kToolboxClosed,
  kZoomChanged,
  kZoomReset,
  kZoomLimit,
  kRunFinished,
  kRunFailed,
  kOutputSummary,
  kOutputLine,
  kNoOutput,
  kAccessibilityOn,
  kAccessibilityOff,
  kError,
  kEventKindCount,
};

inline constexpr size_t kEventKindCount =
    static_cast<size_t>(EventKind::kEventKindCount);

std::string_view EventKindName(EventKind kind);

// An engine occurrence plus the named values its template may reference.
struct Event {
  EventKind kind = EventKind::kBoundary;
  std::map<std::string, std::string> vars;

  Event& Set(std::string key, std::string value) {
    vars[std::move(key)] = std::move(value);
    return *this;
  }
};

Event MakeEvent(EventKind kind);
// Error event; |action| names the attempted operation ("paste").
Event ErrorEvent(std::string_view action, const Error& error);

Politeness PolitenessOf(EventKind kind);
Category CategoryOf(EventKind kind);

// Pattern per event kind and verbosity level. Patterns reference event
// variables as {name}; unknown names are left untouched. The default table
// keeps terse text a substring of standard, and standard of verbose.
class MessageTemplates {
 public:
  static const MessageTemplates& Default();

  const std::string& Pattern(EventKind kind, Verbosity verbosity) const;
  void SetPattern(EventKind kind, Verbosity verbosity, std::string pattern);

 private:
  std::array<std::array<std::string, 3>, kEventKindCount> patterns_;
};

std::string ExpandPattern(std::string_view pattern,
                          const std::map<std::string, std::string>& vars);

Announcement Render(const Event& event, Verbosity verbosity,
                    const MessageTemplates& templates =
                        MessageTemplates::Default());

// Pieces used to speak a block. terse = phrase; standard = where + ", " +
// phrase_full; verbose = standard + details.
struct BlockDescription {
  std::string where;        // "Stack A, block 1 of 4"
  std::string phrase;       // "repeat 10"
  std::string phrase_full;  // "repeat 10 times"
  std::string details;      // ", contains 2 blocks, has comment" or empty
};

BlockDescription DescribeBlockParts(const Workspace& ws, std::string_view id);
std::string DescribeBlock(const Workspace& ws, std::string_view id,
                          Verbosity verbosity);

// Expression text for whatever sits in a value slot ("2 < 3", "empty").
std::string InlineValue(const Workspace& ws,
                        const std::optional<BlockId>& id);

// Spoken form of one navigation child, e.g. "times input, number 10".
std::string DescribeElement(const Workspace& ws, std::string_view block,
                            size_t index);
// Short name of a child: "times input", "body", "value field".
std::string ElementName(const Workspace& ws, std::string_view block,
                        size_t index);

// Fills the standard block variables (where, phrase, phrase_full, details)
// for |id| into |event|.
Event& WithBlock(Event& event, const Workspace& ws, std::string_view id);

}  // namespace eaf

#endif  // EAF_ANNOUNCEMENTS_H_
