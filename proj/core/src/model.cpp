#include "rforge/model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace rforge {

namespace {

constexpr const char* kComponentNames[kRationaleComponentCount] = {
    "Goal",       "Need",        "Alternatives", "SelectedAlternative",
    "Validation", "SideEffects", "MaturityStage",
};

constexpr const char* kKindNames[kArtifactKindCount] = {
    "CommitMessage", "Issue",         "PullRequest",   "CodeReview",
    "ClassJavadoc",  "MethodJavadoc", "InlineComment",
};

}  // namespace

const char* component_name(RationaleComponent c) {
  return kComponentNames[static_cast<int>(c)];
}

std::optional<RationaleComponent> parse_component(const std::string& name) {
  for (int i = 0; i < kRationaleComponentCount; ++i) {
    if (name == kComponentNames[i]) return static_cast<RationaleComponent>(i);
  }
  return std::nullopt;
}

std::array<RationaleComponent, kRationaleComponentCount> all_rationale_components() {
  std::array<RationaleComponent, kRationaleComponentCount> out{};
  for (int i = 0; i < kRationaleComponentCount; ++i) {
    out[static_cast<size_t>(i)] = static_cast<RationaleComponent>(i);
  }
  return out;
}

std::array<RationaleComponent, 3> extraction_targets() {
  return {RationaleComponent::Goal, RationaleComponent::Need,
          RationaleComponent::Alternatives};
}

bool is_extraction_target(RationaleComponent c) {
  return c == RationaleComponent::Goal || c == RationaleComponent::Need ||
         c == RationaleComponent::Alternatives;
}

int ComponentSet::size() const { return std::popcount(bits_); }

std::vector<RationaleComponent> ComponentSet::items() const {
  std::vector<RationaleComponent> out;
  for (auto c : all_rationale_components()) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

ComponentSet ComponentSet::restricted_to_targets() const {
  ComponentSet targets;
  for (auto c : extraction_targets()) targets.insert(c);
  return intersect(targets);
}

std::string classify_language(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "other";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "java") return "java";
  if (ext == "md" || ext == "markdown") return "markdown";
  if (ext == "kt" || ext == "kts") return "kotlin";
  if (ext == "xml") return "xml";
  if (ext == "gradle") return "gradle";
  if (ext == "properties") return "properties";
  if (ext == "json") return "json";
  if (ext == "yml" || ext == "yaml") return "yaml";
  if (ext == "txt") return "text";
  return "other";
}

bool is_full_sha(const std::string& sha) {
  if (sha.size() != 40) return false;
  return std::all_of(sha.begin(), sha.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

const char* kind_name(ArtifactKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<ArtifactKind> parse_kind(const std::string& name) {
  for (int i = 0; i < kArtifactKindCount; ++i) {
    if (name == kKindNames[i]) return static_cast<ArtifactKind>(i);
  }
  return std::nullopt;
}

bool canonical_ref_less(const ArtifactRef& a, const ArtifactRef& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.locator.size() != b.locator.size()) {
    return a.locator.size() < b.locator.size();
  }
  return a.locator < b.locator;
}

const char* relevance_name(Relevance r) {
  switch (r) {
    case Relevance::Relevant:
      return "relevant";
    case Relevance::Irrelevant:
      return "irrelevant";
    default:
      return "unknown";
  }
}

std::optional<Relevance> parse_relevance(const std::string& name) {
  if (name == "unknown") return Relevance::Unknown;
  if (name == "relevant") return Relevance::Relevant;
  if (name == "irrelevant") return Relevance::Irrelevant;
  return std::nullopt;
}

std::string Artifact::joined_text() const {
  std::string out;
  for (const auto& b : body_blocks) {
    if (!out.empty()) out += '\n';
    out += b.text;
  }
  return out;
}

}  // namespace rforge
