#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rforge {

/// Fine-grained facets of code-change rationale. Goal, Need and
/// Alternatives are the extraction targets; the remaining members occur
/// only in annotation records.
enum class RationaleComponent : std::uint8_t {
  Goal = 0,
  Need,
  Alternatives,
  SelectedAlternative,
  Validation,
  SideEffects,
  MaturityStage,
};

inline constexpr int kRationaleComponentCount = 7;

const char* component_name(RationaleComponent c);
std::optional<RationaleComponent> parse_component(const std::string& name);

std::array<RationaleComponent, kRationaleComponentCount> all_rationale_components();

/// The three components the extractor is allowed to emit, in fixed order:
/// Goal, Need, Alternatives.
std::array<RationaleComponent, 3> extraction_targets();
bool is_extraction_target(RationaleComponent c);

/// Small value-type set of rationale components (at most 7 members).
class ComponentSet {
 public:
  constexpr ComponentSet() = default;
  ComponentSet(std::initializer_list<RationaleComponent> cs) {
    for (auto c : cs) insert(c);
  }

  void insert(RationaleComponent c) { bits_ |= bit(c); }
  void erase(RationaleComponent c) { bits_ &= static_cast<std::uint8_t>(~bit(c)); }
  bool contains(RationaleComponent c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  int size() const;

  /// Members in canonical (enum) order.
  std::vector<RationaleComponent> items() const;

  ComponentSet intersect(const ComponentSet& o) const {
    ComponentSet r;
    r.bits_ = bits_ & o.bits_;
    return r;
  }
  ComponentSet unite(const ComponentSet& o) const {
    ComponentSet r;
    r.bits_ = static_cast<std::uint8_t>(bits_ | o.bits_);
    return r;
  }

  /// Drops every member that is not an extraction target.
  ComponentSet restricted_to_targets() const;

  bool operator==(const ComponentSet&) const = default;

 private:
  static constexpr std::uint8_t bit(RationaleComponent c) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }
  std::uint8_t bits_ = 0;
};

struct ChangedFile {
  std::string path;
  std::string language;  // "java", "markdown", ... (see classify_language)
  int added = 0;
  int removed = 0;

  bool operator==(const ChangedFile&) const = default;
};

std::string classify_language(const std::string& path);

/// The unit of analysis: one commit in a hosted repository.
struct Commit {
  std::string repo_slug;  // owner/name
  std::string sha;        // 40 lowercase hex chars
  std::string message;
  std::string diff;  // unified diff text
  std::vector<ChangedFile> changed_files;

  bool operator==(const Commit&) const = default;
};

/// True iff `sha` is exactly 40 lowercase hexadecimal characters.
bool is_full_sha(const std::string& sha);

enum class ArtifactKind : std::uint8_t {
  CommitMessage = 0,
  Issue,
  PullRequest,
  CodeReview,
  ClassJavadoc,
  MethodJavadoc,
  InlineComment,
};

inline constexpr int kArtifactKindCount = 7;

const char* kind_name(ArtifactKind k);
std::optional<ArtifactKind> parse_kind(const std::string& name);

/// Identifies one artifact within a commit's graph by (kind, locator).
/// The locator is platform-native: an issue/PR number, a file path for
/// code-comment kinds, or the literal token "commit-message".
struct ArtifactRef {
  ArtifactKind kind = ArtifactKind::CommitMessage;
  std::string locator;
  std::string url;  // empty for local kinds

  bool same_identity(const ArtifactRef& o) const {
    return kind == o.kind && locator == o.locator;
  }
  bool operator==(const ArtifactRef&) const = default;
};

/// Canonical artifact order: by kind (enum order), then locator compared
/// by (length, bytes) so numeric locators sort numerically.
bool canonical_ref_less(const ArtifactRef& a, const ArtifactRef& b);

inline ArtifactRef commit_message_ref() {
  return ArtifactRef{ArtifactKind::CommitMessage, "commit-message", ""};
}

struct BodyBlock {
  std::string author;
  std::string timestamp;  // RFC 3339, or empty for local kinds
  std::string text;

  bool operator==(const BodyBlock&) const = default;
};

enum class Relevance : std::uint8_t { Unknown = 0, Relevant, Irrelevant };

const char* relevance_name(Relevance r);
std::optional<Relevance> parse_relevance(const std::string& name);

/// A typed development document linked to a commit. Blocks preserve
/// platform chronological order. Relevance is carried as data only; the
/// pipeline never filters on it.
struct Artifact {
  ArtifactRef ref;
  std::string title;
  std::vector<BodyBlock> body_blocks;
  Relevance relevance = Relevance::Unknown;

  bool operator==(const Artifact&) const = default;

  /// All block texts joined with newlines; the artifact's stored text.
  std::string joined_text() const;
};

struct Sentence {
  ArtifactRef artifact;
  int ordinal = 0;  // 0-based, contiguous within one artifact
  std::string text;

  bool operator==(const Sentence&) const = default;
};

struct LabeledSentence {
  Sentence sentence;
  ComponentSet labels;  // possibly empty; an empty set is still a valid row

  bool operator==(const LabeledSentence&) const = default;
};

}  // namespace rforge
