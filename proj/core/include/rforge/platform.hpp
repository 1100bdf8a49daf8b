#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rforge/http.hpp"

namespace rforge {

struct CommitFileData {
  std::string path;
  int additions = 0;
  int deletions = 0;
  std::string patch;
};

struct CommitData {
  std::string message;
  std::string html_url;
  std::vector<CommitFileData> files;
};

struct PlatformComment {
  std::string author;
  std::string created_at;
  std::string body;
};

struct IssueData {
  long number = 0;
  bool is_pull_request = false;
  std::string title;
  std::string body;
  std::string author;
  std::string created_at;
  std::string html_url;
  std::vector<PlatformComment> comments;
};

struct ReviewComment {
  long id = 0;
  long thread_root = 0;  // id of the first comment in the thread
  std::string author;
  std::string created_at;
  std::string body;
};

struct SearchHit {
  long number = 0;
  bool is_pull_request = false;
};

/// Read-only view of a GitHub-style hosting platform. Implementations
/// must be safe for concurrent calls.
class PlatformClient {
 public:
  virtual ~PlatformClient() = default;

  virtual std::optional<CommitData> fetch_commit(const std::string& repo_slug,
                                                 const std::string& sha) = 0;
  /// Issues and pull requests share number space; is_pull_request tells
  /// them apart. Returns nullopt when the number does not exist.
  virtual std::optional<IssueData> fetch_issue(const std::string& repo_slug,
                                               long number) = 0;
  virtual std::vector<ReviewComment> fetch_review_comments(
      const std::string& repo_slug, long pr_number) = 0;
  /// Issues/PRs whose discussions mention the commit hash.
  virtual std::vector<SearchHit> search_commit_mentions(
      const std::string& repo_slug, const std::string& sha) = 0;
  /// File content at a ref, or nullopt when absent.
  virtual std::optional<std::string> fetch_file(const std::string& repo_slug,
                                                const std::string& path,
                                                const std::string& ref) = 0;
};

struct GithubOptions {
  std::string host = "api.github.com";
  std::string token;  // usually from RF_PLATFORM_TOKEN
  RetryPolicy retry;
  int max_pages = 10;  // pagination cap per listing endpoint
};

class GithubClient : public PlatformClient {
 public:
  GithubClient(std::shared_ptr<HttpClient> http, GithubOptions options);

  std::optional<CommitData> fetch_commit(const std::string& repo_slug,
                                         const std::string& sha) override;
  std::optional<IssueData> fetch_issue(const std::string& repo_slug,
                                       long number) override;
  std::vector<ReviewComment> fetch_review_comments(const std::string& repo_slug,
                                                   long pr_number) override;
  std::vector<SearchHit> search_commit_mentions(const std::string& repo_slug,
                                                const std::string& sha) override;
  std::optional<std::string> fetch_file(const std::string& repo_slug,
                                        const std::string& path,
                                        const std::string& ref) override;

 private:
  /// Sends with retries; 404 yields status 404 (not an error), rate-limit
  /// responses raise RateLimited, other failures PlatformUnavailable.
  HttpResponse get(const std::string& target);

  std::shared_ptr<HttpClient> http_;
  GithubOptions options_;
};

std::string url_encode_component(const std::string& value);
std::string decode_base64(const std::string& data);

}  // namespace rforge
