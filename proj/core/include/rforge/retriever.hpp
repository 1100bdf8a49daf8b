#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rforge/links.hpp"
#include "rforge/model.hpp"
#include "rforge/platform.hpp"
#include "rforge/serialization.hpp"

namespace rforge {

struct LinkEdge {
  ArtifactRef from;
  ArtifactRef to;
  std::string evidence;  // verbatim snippet from the `from` artifact's text;
                         // empty for structural links (PR -> its code review)

  bool operator==(const LinkEdge&) const = default;
};

/// The commit plus all resolved artifacts and the evidence-bearing links
/// among them. Artifacts are kept in canonical order (kind, then locator
/// by length/bytes) so serializations are byte-stable.
struct ArtifactGraph {
  Commit commit;
  std::vector<Artifact> artifacts;
  std::vector<LinkEdge> edges;

  const Artifact* find(const ArtifactRef& ref) const;
};

json to_json(const ArtifactGraph& g);
ArtifactGraph artifact_graph_from_json(const json& j);

struct ResolveOptions {
  int parallelism = 4;
};

/// Resolves the commit's artifact graph: reference tokens in the commit
/// message, commit-hash mentions in issue/PR discussions, then one round
/// of cross-artifact reference scanning (two hops from the commit).
/// Every linked pull request contributes its code-review thread artifact.
ArtifactGraph resolve_commit_artifacts(const Commit& commit, PlatformClient& platform,
                                       const ResolveOptions& options = {});

/// One CodeReview artifact aggregating all review-thread comments of a PR
/// in timestamp order, or nullopt when the PR has no review threads.
std::optional<Artifact> fetch_code_review(const std::string& repo_slug,
                                          const ArtifactRef& pr_ref,
                                          PlatformClient& platform);

/// Canonicalizes node and edge order in place.
void canonicalize(ArtifactGraph& graph);

}  // namespace rforge
