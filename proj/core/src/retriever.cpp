#include "rforge/retriever.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "rforge/errors.hpp"
#include "rforge/markdown.hpp"
#include "rforge/parallel.hpp"

namespace rforge {

namespace {

Artifact commit_message_artifact(const Commit& commit) {
  Artifact a;
  a.ref = commit_message_ref();
  a.title = "";
  std::string text = clean_markdown(commit.message);
  a.body_blocks.push_back(BodyBlock{"", "", text});
  return a;
}

Artifact issue_artifact(const IssueData& data) {
  Artifact a;
  a.ref.kind = data.is_pull_request ? ArtifactKind::PullRequest : ArtifactKind::Issue;
  a.ref.locator = std::to_string(data.number);
  a.ref.url = data.html_url;
  a.title = data.title;
  std::string body = clean_markdown(data.body);
  if (!body.empty()) {
    a.body_blocks.push_back(BodyBlock{data.author, data.created_at, body});
  }
  for (const auto& c : data.comments) {
    std::string text = clean_markdown(c.body);
    if (text.empty()) continue;
    a.body_blocks.push_back(BodyBlock{c.author, c.created_at, text});
  }
  return a;
}

struct Discovery {
  long number = 0;
  ArtifactRef from;       // artifact whose text referenced the number
  std::string evidence;   // matched token; empty for search-origin finds
  bool from_search = false;
};

}  // namespace

const Artifact* ArtifactGraph::find(const ArtifactRef& ref) const {
  for (const auto& a : artifacts) {
    if (a.ref.same_identity(ref)) return &a;
  }
  return nullptr;
}

json to_json(const ArtifactGraph& g) {
  json artifacts = json::array();
  for (const auto& a : g.artifacts) artifacts.push_back(to_json(a));
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back(json{{"from", to_json(e.from)},
                         {"to", to_json(e.to)},
                         {"evidence", e.evidence}});
  }
  return json{{"commit", to_json(g.commit)}, {"artifacts", artifacts}, {"edges", edges}};
}

ArtifactGraph artifact_graph_from_json(const json& j) {
  ArtifactGraph g;
  g.commit = commit_from_json(j.at("commit"));
  for (const auto& a : j.at("artifacts")) g.artifacts.push_back(artifact_from_json(a));
  for (const auto& e : j.at("edges")) {
    LinkEdge edge;
    edge.from = artifact_ref_from_json(e.at("from"));
    edge.to = artifact_ref_from_json(e.at("to"));
    edge.evidence = e.value("evidence", "");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

void canonicalize(ArtifactGraph& graph) {
  std::sort(graph.artifacts.begin(), graph.artifacts.end(),
            [](const Artifact& a, const Artifact& b) {
              return canonical_ref_less(a.ref, b.ref);
            });
  auto edge_less = [](const LinkEdge& a, const LinkEdge& b) {
    if (!a.from.same_identity(b.from)) return canonical_ref_less(a.from, b.from);
    if (!a.to.same_identity(b.to)) return canonical_ref_less(a.to, b.to);
    return a.evidence < b.evidence;
  };
  std::sort(graph.edges.begin(), graph.edges.end(), edge_less);
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()),
                    graph.edges.end());
}

std::optional<Artifact> fetch_code_review(const std::string& repo_slug,
                                          const ArtifactRef& pr_ref,
                                          PlatformClient& platform) {
  if (pr_ref.kind != ArtifactKind::PullRequest) {
    throw Error(ErrorCode::InvalidArgument,
                "fetch_code_review expects a PullRequest ref");
  }
  long number = std::stol(pr_ref.locator);
  auto comments = platform.fetch_review_comments(repo_slug, number);
  if (comments.empty()) return std::nullopt;

  std::sort(comments.begin(), comments.end(),
            [](const ReviewComment& a, const ReviewComment& b) {
              if (a.created_at != b.created_at) return a.created_at < b.created_at;
              return a.id < b.id;
            });

  Artifact a;
  a.ref = ArtifactRef{ArtifactKind::CodeReview, pr_ref.locator, ""};
  a.title = "";
  for (const auto& c : comments) {
    std::string text = clean_markdown(c.body);
    if (text.empty()) continue;
    a.body_blocks.push_back(BodyBlock{c.author, c.created_at, text});
  }
  if (a.body_blocks.empty()) return std::nullopt;
  return a;
}

ArtifactGraph resolve_commit_artifacts(const Commit& commit, PlatformClient& platform,
                                       const ResolveOptions& options) {
  if (!is_full_sha(commit.sha)) {
    throw Error(ErrorCode::InvalidArgument,
                "commit sha must be 40 lowercase hex chars: " + commit.sha);
  }
  if (commit.changed_files.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "commit " + commit.sha + " has no changed files");
  }

  ArtifactGraph graph;
  graph.commit = commit;
  Artifact cm = commit_message_artifact(commit);
  const std::string cm_text = cm.joined_text();
  graph.artifacts.push_back(std::move(cm));

  // Hop 1: reference tokens in the commit message plus platform search
  // for commit-hash mentions.
  std::vector<Discovery> hop1;
  std::set<long> hop1_numbers;
  for (const auto& cand : extract_artifact_refs(cm_text, commit.repo_slug)) {
    if (hop1_numbers.insert(cand.number).second) {
      hop1.push_back(Discovery{cand.number, commit_message_ref(), cand.raw_token, false});
    }
  }
  for (const auto& hit : platform.search_commit_mentions(commit.repo_slug, commit.sha)) {
    if (hop1_numbers.insert(hit.number).second) {
      hop1.push_back(Discovery{hit.number, commit_message_ref(), "", true});
    }
  }

  std::mutex graph_mutex;
  std::set<long> fetched_numbers = hop1_numbers;

  auto fetch_batch = [&](const std::vector<Discovery>& batch) {
    std::vector<std::optional<IssueData>> results(batch.size());
    parallel_for_each(batch.size(), options.parallelism, [&](size_t i) {
      results[i] = platform.fetch_issue(commit.repo_slug, batch[i].number);
    });
    std::vector<Artifact> added;
    for (size_t i = 0; i < batch.size(); ++i) {
      if (!results[i]) continue;  // dangling reference
      Artifact artifact = issue_artifact(*results[i]);
      const Discovery& d = batch[i];
      std::lock_guard<std::mutex> lock(graph_mutex);
      bool exists = graph.find(artifact.ref) != nullptr;
      if (d.from_search) {
        auto mentions = find_sha_mentions(artifact.joined_text(), commit.sha);
        if (mentions.empty()) continue;  // no verbatim evidence survives cleaning
        graph.edges.push_back(LinkEdge{artifact.ref, commit_message_ref(), mentions[0]});
      } else {
        graph.edges.push_back(LinkEdge{d.from, artifact.ref, d.evidence});
      }
      if (!exists) {
        graph.artifacts.push_back(artifact);
        added.push_back(std::move(artifact));
      }
    }
    return added;
  };

  std::vector<Artifact> hop1_artifacts = fetch_batch(hop1);

  // Hop 2: one round of cross-artifact reference scanning.
  std::sort(hop1_artifacts.begin(), hop1_artifacts.end(),
            [](const Artifact& a, const Artifact& b) {
              return canonical_ref_less(a.ref, b.ref);
            });
  std::vector<Discovery> hop2;
  for (const auto& a : hop1_artifacts) {
    for (const auto& cand : extract_artifact_refs(a.joined_text(), commit.repo_slug)) {
      if (fetched_numbers.count(cand.number)) {
        // Known node: still record the evidence-bearing edge.
        for (auto kind : {ArtifactKind::Issue, ArtifactKind::PullRequest}) {
          ArtifactRef ref{kind, std::to_string(cand.number), ""};
          if (const Artifact* node = graph.find(ref)) {
            graph.edges.push_back(LinkEdge{a.ref, node->ref, cand.raw_token});
          }
        }
        continue;
      }
      fetched_numbers.insert(cand.number);
      hop2.push_back(Discovery{cand.number, a.ref, cand.raw_token, false});
    }
  }
  fetch_batch(hop2);

  // Code-review threads for every linked pull request.
  std::vector<ArtifactRef> pr_refs;
  for (const auto& a : graph.artifacts) {
    if (a.ref.kind == ArtifactKind::PullRequest) pr_refs.push_back(a.ref);
  }
  std::vector<std::optional<Artifact>> reviews(pr_refs.size());
  parallel_for_each(pr_refs.size(), options.parallelism, [&](size_t i) {
    reviews[i] = fetch_code_review(commit.repo_slug, pr_refs[i], platform);
  });
  for (size_t i = 0; i < pr_refs.size(); ++i) {
    if (!reviews[i]) continue;
    graph.artifacts.push_back(*reviews[i]);
    graph.edges.push_back(LinkEdge{pr_refs[i], reviews[i]->ref, ""});
  }

  canonicalize(graph);
  return graph;
}

}  // namespace rforge
