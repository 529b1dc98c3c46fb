#include "eaf/announcements.h"

#include "eaf/labeling.h"

namespace eaf {

std::string_view PolitenessName(Politeness politeness) {
  return politeness == Politeness::kAssertive ? "assertive" : "polite";
}

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kNavigation: return "navigation";
    case Category::kMode: return "mode";
    case Category::kEdit: return "edit";
    case Category::kError: return "error";
    case Category::kHelp: return "help";
    case Category::kSystem: return "system";
  }
  return "system";
}

std::string_view VerbosityName(Verbosity verbosity) {
  switch (verbosity) {
    case Verbosity::kTerse: return "terse";
    case Verbosity::kStandard: return "standard";
    case Verbosity::kVerbose: return "verbose";
  }
  return "standard";
}

std::optional<Verbosity> ParseVerbosity(std::string_view text) {
  if (text == "terse") return Verbosity::kTerse;
  if (text == "standard") return Verbosity::kStandard;
  if (text == "verbose") return Verbosity::kVerbose;
  return std::nullopt;
}

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kMovedToBlock: return "moved-to-block";
    case EventKind::kMovedToElement: return "moved-to-element";
    case EventKind::kMovedToStack: return "moved-to-stack";
    case EventKind::kMovedToWorkspace: return "moved-to-workspace";
    case EventKind::kMovedToToolboxEntry: return "moved-to-toolbox-entry";
    case EventKind::kBoundary: return "boundary";
    case EventKind::kStackMissing: return "stack-missing";
    case EventKind::kLocate: return "locate";
    case EventKind::kAssistantPreview: return "assistant-preview";
    case EventKind::kAssistantOn: return "assistant-on";
    case EventKind::kAssistantOff: return "assistant-off";
    case EventKind::kShortcutsList: return "shortcuts-list";
    case EventKind::kShortcutsClosed: return "shortcuts-closed";
    case EventKind::kModeEdit: return "mode-edit";
    case EventKind::kModeNavigation: return "mode-navigation";
    case EventKind::kFieldEditStarted: return "field-edit-started";
    case EventKind::kFieldInput: return "field-input";
    case EventKind::kFieldCommitted: return "field-committed";
    case EventKind::kFieldCancelled: return "field-cancelled";
    case EventKind::kCut: return "cut";
    case EventKind::kCopied: return "copied";
    case EventKind::kPasted: return "pasted";
    case EventKind::kDeleted: return "deleted";
    case EventKind::kDisconnected: return "disconnected";
    case EventKind::kCommentAdded: return "comment-added";
    case EventKind::kCommentHidden: return "comment-hidden";
    case EventKind::kCommentShown: return "comment-shown";
    case EventKind::kInserted: return "inserted";
    case EventKind::kStackCreated: return "stack-created";
    case EventKind::kStackRetired: return "stack-retired";
    case EventKind::kStackRenamed: return "stack-renamed";
    case EventKind::kToolboxOpened: return "toolbox-opened";
    case EventKind::kToolboxFiltered: return "toolbox-filtered";
    case EventKind::kToolboxClosed: return "toolbox-closed";
    case EventKind::kZoomChanged: return "zoom-changed";
    case EventKind::kZoomReset: return "zoom-reset";
    case EventKind::kZoomLimit: return "zoom-limit";
    case EventKind::kRunFinished: return "run-finished";
    case EventKind::kRunFailed: return "run-failed";
    case EventKind::kOutputSummary: return "output-summary";
    case EventKind::kOutputLine: return "output-line";
    case EventKind::kNoOutput: return "no-output";
    case EventKind::kAccessibilityOn: return "accessibility-on";
    case EventKind::kAccessibilityOff: return "accessibility-off";
    case EventKind::kError: return "error";
    case EventKind::kEventKindCount: break;
  }
  return "unknown";
}

Event MakeEvent(EventKind kind) {
  Event event;
  event.kind = kind;
  return event;
}

Event ErrorEvent(std::string_view action, const Error& error) {
  Event event = MakeEvent(EventKind::kError);
  event.Set("action", std::string(action));
  event.Set("code", std::string(ErrorCodeName(error.code)));
  event.Set("message", error.detail.empty()
                           ? std::string(ErrorCodeName(error.code))
                           : error.detail);
  return event;
}

Politeness PolitenessOf(EventKind kind) {
  switch (kind) {
    case EventKind::kModeEdit:
    case EventKind::kModeNavigation:
    case EventKind::kFieldEditStarted:
    case EventKind::kFieldCancelled:
    case EventKind::kFieldCommitted:
    case EventKind::kCut:
    case EventKind::kPasted:
    case EventKind::kDeleted:
    case EventKind::kDisconnected:
    case EventKind::kInserted:
    case EventKind::kStackCreated:
    case EventKind::kStackRetired:
    case EventKind::kStackRenamed:
    case EventKind::kCommentAdded:
    case EventKind::kCommentHidden:
    case EventKind::kCommentShown:
    case EventKind::kRunFailed:
    case EventKind::kAccessibilityOn:
    case EventKind::kAccessibilityOff:
    case EventKind::kError:
      return Politeness::kAssertive;
    default:
      return Politeness::kPolite;
  }
}

Category CategoryOf(EventKind kind) {
  switch (kind) {
    case EventKind::kMovedToBlock:
    case EventKind::kMovedToElement:
    case EventKind::kMovedToStack:
    case EventKind::kMovedToWorkspace:
    case EventKind::kMovedToToolboxEntry:
    case EventKind::kBoundary:
    case EventKind::kStackMissing:
    case EventKind::kLocate:
    case EventKind::kFieldInput:
    case EventKind::kToolboxOpened:
    case EventKind::kToolboxFiltered:
    case EventKind::kToolboxClosed:
      return Category::kNavigation;
    case EventKind::kModeEdit:
    case EventKind::kModeNavigation:
    case EventKind::kFieldEditStarted:
    case EventKind::kFieldCancelled:
      return Category::kMode;
    case EventKind::kFieldCommitted:
    case EventKind::kCut:
    case EventKind::kCopied:
    case EventKind::kPasted:
    case EventKind::kDeleted:
    case EventKind::kDisconnected:
    case EventKind::kCommentAdded:
    case EventKind::kCommentHidden:
    case EventKind::kCommentShown:
    case EventKind::kInserted:
    case EventKind::kStackCreated:
    case EventKind::kStackRetired:
    case EventKind::kStackRenamed:
      return Category::kEdit;
    case EventKind::kAssistantPreview:
    case EventKind::kAssistantOn:
    case EventKind::kAssistantOff:
    case EventKind::kShortcutsList:
    case EventKind::kShortcutsClosed:
      return Category::kHelp;
    case EventKind::kError:
      return Category::kError;
    default:
      return Category::kSystem;
  }
}

namespace {

struct DefaultPattern {
  EventKind kind;
  const char* terse;
  const char* standard;
  const char* verbose;
};

// Terse text must stay a contiguous piece of standard text, and standard of
// verbose; extra detail is only ever added at the ends.
constexpr DefaultPattern kDefaultPatterns[] = {
    {EventKind::kMovedToBlock, "{phrase}", "{where}, {phrase_full}",
     "{where}, {phrase_full}{details}"},
    {EventKind::kMovedToElement, "{element}", "{where}, {owner}, {element}",
     "{where}, {owner}, {element}{element_details}"},
    {EventKind::kMovedToStack, "{stack}", "{stack}, {count}",
     "{stack}, {count}, top: {top}"},
    {EventKind::kMovedToWorkspace, "Workspace", "Workspace cursor at {x}, {y}",
     "Workspace cursor at {x}, {y}; {stacks}"},
    {EventKind::kMovedToToolboxEntry, "{entry}", "{entry}, {category} category",
     "{entry}, {category} category, {position}"},
    {EventKind::kBoundary, "{reason}", "{reason}", "{reason}"},
    {EventKind::kStackMissing, "No stack {letter}", "No stack {letter}",
     "No stack {letter}; stacks: {stacks}"},
    {EventKind::kLocate, "{text}", "{text}", "{text}"},
    {EventKind::kAssistantPreview, "{text}", "{text}", "{text}"},
    {EventKind::kAssistantOn, "Navigational assistant on",
     "Navigational assistant on", "Navigational assistant on"},
    {EventKind::kAssistantOff, "Navigational assistant off",
     "Navigational assistant off", "Navigational assistant off"},
    {EventKind::kShortcutsList, "{listing}", "{listing}", "{listing}"},
    {EventKind::kShortcutsClosed, "Shortcuts list closed",
     "Shortcuts list closed", "Shortcuts list closed"},
    {EventKind::kModeEdit, "Edit mode", "Edit mode: {target}",
     "Edit mode: {target}, {target_where}"},
    {EventKind::kModeNavigation, "Navigation mode", "Navigation mode",
     "Navigation mode"},
    {EventKind::kFieldEditStarted, "Editing {field}",
     "Editing {field}, current value {value}",
     "Editing {field}, current value {value}; type a new value, Enter to "
     "save, Escape to cancel"},
    {EventKind::kFieldInput, "{char}", "{char}", "{char}"},
    {EventKind::kFieldCommitted, "{field} set to {value}",
     "{field} set to {value}, {phrase_full}",
     "{field} set to {value}, {phrase_full}, {where}"},
    {EventKind::kFieldCancelled, "Edit cancelled",
     "Edit cancelled, {field} unchanged", "Edit cancelled, {field} unchanged"},
    {EventKind::kCut, "Cut {phrase}", "Cut {phrase_full} from {origin}",
     "Cut {phrase_full} from {origin}{details}"},
    {EventKind::kCopied, "Copied {phrase}", "Copied {phrase_full}",
     "Copied {phrase_full}{details}"},
    {EventKind::kPasted, "Pasted {phrase}", "Pasted {phrase_full}, {where}",
     "Pasted {phrase_full}, {where}{details}"},
    {EventKind::kDeleted, "Deleted {phrase}",
     "Deleted {phrase_full} from {origin}",
     "Deleted {phrase_full} from {origin}{details}"},
    {EventKind::kDisconnected, "Disconnected {phrase}",
     "Disconnected {phrase_full}, {where}",
     "Disconnected {phrase_full}, {where}{details}"},
    {EventKind::kCommentAdded, "Comment added", "Comment added: {text}",
     "Comment added: {text}"},
    {EventKind::kCommentHidden, "Comment hidden", "Comment hidden: {text}",
     "Comment hidden: {text}"},
    {EventKind::kCommentShown, "Comment shown", "Comment shown: {text}",
     "Comment shown: {text}"},
    {EventKind::kInserted, "Inserted {phrase}",
     "Inserted {phrase_full}, {where}",
     "Inserted {phrase_full}, {where}{details}"},
    {EventKind::kStackCreated, "New {stack}", "New {stack}, {count}",
     "New {stack}, {count}"},
    {EventKind::kStackRetired, "{stack} removed", "{stack} removed",
     "{stack} removed"},
    {EventKind::kStackRenamed, "\"{name}\"", "Stack {label} named \"{name}\"",
     "Stack {label} named \"{name}\""},
    {EventKind::kToolboxOpened, "Toolbox", "Toolbox open, {count}, {entry}",
     "Toolbox open, {count}, {entry}, {category} category"},
    {EventKind::kToolboxFiltered, "{count} compatible",
     "Showing {count} compatible blocks",
     "Showing {count} compatible blocks for {context}"},
    {EventKind::kToolboxClosed, "Toolbox closed", "Toolbox closed, {target}",
     "Toolbox closed, {target}"},
    {EventKind::kZoomChanged, "zoom {percent}%", "zoom {percent}%",
     "zoom {percent}%"},
    {EventKind::kZoomReset, "zoom reset {percent}%", "zoom reset {percent}%",
     "zoom reset {percent}%"},
    {EventKind::kZoomLimit, "{limit} zoom", "{limit} zoom",
     "{limit} zoom, {percent}%"},
    {EventKind::kRunFinished, "{count}", "Program finished, {count}",
     "Program finished, {count}, {steps} steps"},
    {EventKind::kRunFailed, "{message}", "Program error: {message}, {count}",
     "Program error: {message}, {count}, {steps} steps"},
    {EventKind::kOutputSummary, "{count}", "Output: {count}",
     "Output: {count}, {status}"},
    {EventKind::kOutputLine, "{line}", "{line}", "{line}"},
    {EventKind::kNoOutput, "No output", "No output yet; run the program first",
     "No output yet; run the program first"},
    {EventKind::kAccessibilityOn, "Keyboard accessibility enabled",
     "Keyboard accessibility enabled", "Keyboard accessibility enabled"},
    {EventKind::kAccessibilityOff, "Keyboard accessibility disabled",
     "Keyboard accessibility disabled", "Keyboard accessibility disabled"},
    {EventKind::kError, "{message}", "Cannot {action}: {message}",
     "Cannot {action}: {message}"},
};

static_assert(std::size(kDefaultPatterns) == kEventKindCount,
              "every event kind needs a default pattern");

MessageTemplates BuildDefaults() {
  MessageTemplates templates;
  for (const auto& entry : kDefaultPatterns) {
    templates.SetPattern(entry.kind, Verbosity::kTerse, entry.terse);
    templates.SetPattern(entry.kind, Verbosity::kStandard, entry.standard);
    templates.SetPattern(entry.kind, Verbosity::kVerbose, entry.verbose);
  }
  return templates;
}

}  // namespace

const MessageTemplates& MessageTemplates::Default() {
  static const MessageTemplates* defaults =
      new MessageTemplates(BuildDefaults());
  return *defaults;
}

const std::string& MessageTemplates::Pattern(EventKind kind,
                                             Verbosity verbosity) const {
  return patterns_[static_cast<size_t>(kind)]
                  [static_cast<size_t>(verbosity)];
}

void MessageTemplates::SetPattern(EventKind kind, Verbosity verbosity,
                                  std::string pattern) {
  patterns_[static_cast<size_t>(kind)][static_cast<size_t>(verbosity)] =
      std::move(pattern);
}

std::string ExpandPattern(std::string_view pattern,
                          const std::map<std::string, std::string>& vars) {
  std::string out;
  size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] == '{') {
      size_t close = pattern.find('}', i);
      if (close != std::string_view::npos) {
        auto it = vars.find(std::string(pattern.substr(i + 1, close - i - 1)));
        if (it != vars.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += pattern[i++];
  }
  return out;
}

Announcement Render(const Event& event, Verbosity verbosity,
                    const MessageTemplates& templates) {
  Announcement a;
  a.text = ExpandPattern(templates.Pattern(event.kind, verbosity), event.vars);
  if (a.text.empty())
    a.text = std::string(EventKindName(event.kind));
  a.politeness = PolitenessOf(event.kind);
  a.category = CategoryOf(event.kind);
  return a;
}

namespace {

std::string Plural(size_t n, std::string_view one, std::string_view many) {
  return std::to_string(n) + " " + std::string(n == 1 ? one : many);
}

std::string FieldText(const FieldSpec* spec, const FieldValue& value) {
  std::string text = FieldValueText(value);
  if (spec && spec->kind == FieldKind::kText && text.empty())
    return "empty text";
  return text;
}

// Fills a phrase pattern from the block's fields and inline inputs.
std::string ExpandPhrase(const Workspace& ws, const Block& block,
                         const BlockDefinition& def) {
  std::map<std::string, std::string> vars;
  for (const auto& spec : def.fields) {
    auto it = block.field_values.find(spec.name);
    vars[spec.name] =
        it == block.field_values.end() ? "?" : FieldText(&spec, it->second);
  }
  for (const auto& input : def.value_inputs) {
    auto it = block.value_slots.find(input.name);
    std::optional<BlockId> child =
        it == block.value_slots.end() ? std::nullopt : it->second;
    std::string inner = InlineValue(ws, child);
    const BlockDefinition* child_def = child ? ws.DefinitionOf(*child) : nullptr;
    if (child_def && !child_def->value_inputs.empty())
      inner = "(" + inner + ")";
    vars[input.name] = inner;
  }
  return ExpandPattern(def.phrase, vars);
}

std::string Phrase(const Workspace& ws, std::string_view id) {
  const Block* block = ws.FindBlock(id);
  const BlockDefinition* def = ws.DefinitionOf(id);
  if (!block || !def)
    return "unknown block";
  std::string expanded = ExpandPhrase(ws, *block, *def);
  if (def->kind == BlockKind::kValue &&
      expanded.compare(0, def->label.size(), def->label) != 0) {
    return def->label + " " + expanded;
  }
  return expanded;
}

size_t ChainLength(const Workspace& ws, std::optional<BlockId> head) {
  size_t n = 0;
  while (head && n <= ws.blocks().size()) {
    ++n;
    const Block* block = ws.FindBlock(*head);
    head = block ? block->next : std::nullopt;
  }
  return n;
}

}  // namespace

std::string InlineValue(const Workspace& ws,
                        const std::optional<BlockId>& id) {
  if (!id)
    return "empty";
  const Block* block = ws.FindBlock(*id);
  const BlockDefinition* def = ws.DefinitionOf(*id);
  if (!block || !def)
    return "unknown";
  return ExpandPhrase(ws, *block, *def);
}

BlockDescription DescribeBlockParts(const Workspace& ws, std::string_view id) {
  BlockDescription d;
  const BlockDefinition* def = ws.DefinitionOf(id);
  const Block* block = ws.FindBlock(id);
  auto number = ws.numbering().find(std::string(id));
  const Stack* stack = ws.StackOf(id);
  if (stack && number != ws.numbering().end()) {
    d.where = StackReference(*stack) + ", block " +
              std::to_string(number->second.number) + " of " +
              std::to_string(number->second.total);
  } else {
    d.where = "Detached block";
  }
  d.phrase = Phrase(ws, id);
  d.phrase_full = d.phrase;
  if (def && !def->suffix.empty())
    d.phrase_full += " " + def->suffix;
  if (block) {
    size_t nested = ws.Subtree(std::string(id)).size() - 1;
    if (nested > 0)
      d.details += ", contains " + Plural(nested, "block", "blocks");
    if (block->comment)
      d.details += block->comment->visible ? ", has comment"
                                           : ", has hidden comment";
  }
  return d;
}

std::string DescribeBlock(const Workspace& ws, std::string_view id,
                          Verbosity verbosity) {
  BlockDescription d = DescribeBlockParts(ws, id);
  switch (verbosity) {
    case Verbosity::kTerse:
      return d.phrase;
    case Verbosity::kStandard:
      return d.where + ", " + d.phrase_full;
    case Verbosity::kVerbose:
      return d.where + ", " + d.phrase_full + d.details;
  }
  return d.phrase;
}

std::string ElementName(const Workspace& ws, std::string_view block,
                        size_t index) {
  const BlockDefinition* def = ws.DefinitionOf(block);
  if (!def)
    return "unknown";
  if (index < def->fields.size())
    return def->fields[index].display + " field";
  index -= def->fields.size();
  if (index < def->value_inputs.size())
    return def->value_inputs[index].display + " input";
  index -= def->value_inputs.size();
  if (index < def->statement_inputs.size())
    return def->statement_inputs[index].display;
  return "unknown";
}

std::string DescribeElement(const Workspace& ws, std::string_view block,
                            size_t index) {
  std::vector<ElementRef> children = Children(ws, block);
  const Block* owner = ws.FindBlock(block);
  const BlockDefinition* def = ws.DefinitionOf(block);
  if (!owner || !def || index >= children.size())
    return "unknown";
  const ElementRef& element = children[index];
  std::string name = ElementName(ws, block, index);
  switch (element.kind) {
    case ElementKind::kField: {
      auto it = owner->field_values.find(element.name);
      return name + ", " +
             (it == owner->field_values.end()
                  ? std::string("?")
                  : FieldText(def->FindField(element.name), it->second));
    }
    case ElementKind::kValueInput:
      if (!element.attached)
        return name + ", empty";
      return name + ", " + Phrase(ws, *element.attached);
    case ElementKind::kStatementInput:
      if (!element.attached)
        return name + ", empty";
      return name + ", " +
             Plural(ChainLength(ws, element.attached), "block", "blocks");
  }
  return name;
}

Event& WithBlock(Event& event, const Workspace& ws, std::string_view id) {
  BlockDescription d = DescribeBlockParts(ws, id);
  event.Set("where", d.where);
  event.Set("phrase", d.phrase);
  event.Set("phrase_full", d.phrase_full);
  event.Set("details", d.details);
  return event;
}

}  // namespace eaf
