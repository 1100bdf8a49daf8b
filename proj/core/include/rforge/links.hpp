#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rforge/model.hpp"

namespace rforge {

/// An issue/PR reference token found in artifact text. `resolved` stays
/// empty until the platform has told us whether the number is an issue
/// or a pull request; `kind_hint` carries what the pattern itself knows
/// (pull/N and .../pull/N imply PullRequest, issues/N implies Issue).
struct LinkCandidate {
  std::string raw_token;
  long number = 0;
  std::optional<ArtifactKind> kind_hint;
  std::optional<ArtifactRef> resolved;
  ArtifactRef source;

  bool operator==(const LinkCandidate&) const = default;
};

/// Finds issue/PR reference tokens: `#N`, `pull/N`, `issues/N`, `GH-N`
/// and full web addresses. Matches appear in first-occurrence order and
/// are collapsed to one candidate per number. Web addresses pointing at
/// a different repository claim their text span but yield no candidate.
std::vector<LinkCandidate> extract_artifact_refs(const std::string& text,
                                                 const std::string& repo_slug);

/// Positions of commit-hash mentions: the full 40-hex sha or an
/// abbreviated prefix of at least `min_prefix` hex chars, delimited by
/// non-hex characters. Returns the matched tokens in order.
std::vector<std::string> find_sha_mentions(const std::string& text,
                                           const std::string& sha,
                                           size_t min_prefix = 7);

}  // namespace rforge
