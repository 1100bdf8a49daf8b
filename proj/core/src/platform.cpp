#include "rforge/platform.hpp"

#include <algorithm>

#include "rforge/errors.hpp"
#include "rforge/serialization.hpp"

namespace rforge {

namespace {

json parse_payload(const HttpResponse& res, const std::string& target) {
  json j = json::parse(res.body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::PlatformUnavailable,
                "malformed platform response for " + target);
  }
  return j;
}

PlatformComment comment_from(const json& j) {
  PlatformComment c;
  c.author = j.contains("user") && j["user"].is_object()
                 ? j["user"].value("login", "")
                 : "";
  c.created_at = j.value("created_at", "");
  c.body = j.value("body", "");
  return c;
}

bool rate_limited(const HttpResponse& res) {
  if (res.status == 429) return true;
  if (res.status == 403 &&
      res.body.find("rate limit") != std::string::npos) {
    return true;
  }
  return false;
}

}  // namespace

std::string url_encode_component(const std::string& value) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : value) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xf];
    }
  }
  return out;
}

std::string decode_base64(const std::string& data) {
  auto value_of = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::string out;
  int buffer = 0, bits = 0;
  for (char c : data) {
    int v = value_of(c);
    if (v < 0) continue;  // skips '=', newlines, whitespace
    buffer = (buffer << 6) | v;
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((buffer >> bits) & 0xff);
    }
  }
  return out;
}

GithubClient::GithubClient(std::shared_ptr<HttpClient> http, GithubOptions options)
    : http_(std::move(http)), options_(std::move(options)) {}

HttpResponse GithubClient::get(const std::string& target) {
  HttpRequest req;
  req.method = "GET";
  req.host = options_.host;
  req.target = target;
  req.headers["accept"] = "application/vnd.github+json";
  req.headers["user-agent"] = "rationale-forge";
  if (!options_.token.empty()) {
    req.headers["authorization"] = "Bearer " + options_.token;
  }

  const size_t attempts = options_.retry.delays.size() + 1;
  std::string last_failure;
  for (size_t attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) options_.retry.wait(attempt - 1);
    HttpResponse res;
    try {
      res = http_->send(req);
    } catch (const Error& e) {
      last_failure = e.what();
      continue;
    }
    if (rate_limited(res)) {
      throw Error(ErrorCode::RateLimited, "platform rate limit hit on " + target);
    }
    if (res.status >= 500) {
      last_failure = "status " + std::to_string(res.status);
      continue;
    }
    if (res.status == 401) {
      throw Error(ErrorCode::PlatformUnavailable,
                  "authentication failed (401) on " + target);
    }
    return res;
  }
  throw Error(ErrorCode::PlatformUnavailable,
              "request failed after retries: " + target +
                  (last_failure.empty() ? "" : " (" + last_failure + ")"));
}

std::optional<CommitData> GithubClient::fetch_commit(const std::string& repo_slug,
                                                     const std::string& sha) {
  auto target = "/repos/" + repo_slug + "/commits/" + sha;
  auto res = get(target);
  if (res.status == 404) return std::nullopt;
  if (res.status != 200) {
    throw Error(ErrorCode::PlatformUnavailable,
                "status " + std::to_string(res.status) + " on " + target);
  }
  json j = parse_payload(res, target);
  CommitData out;
  out.message = j.contains("commit") ? j["commit"].value("message", "") : "";
  out.html_url = j.value("html_url", "");
  if (j.contains("files") && j["files"].is_array()) {
    for (const auto& f : j["files"]) {
      CommitFileData file;
      file.path = f.value("filename", "");
      file.additions = f.value("additions", 0);
      file.deletions = f.value("deletions", 0);
      file.patch = f.value("patch", "");
      out.files.push_back(std::move(file));
    }
  }
  return out;
}

std::optional<IssueData> GithubClient::fetch_issue(const std::string& repo_slug,
                                                   long number) {
  auto target = "/repos/" + repo_slug + "/issues/" + std::to_string(number);
  auto res = get(target);
  if (res.status == 404) return std::nullopt;
  if (res.status != 200) {
    throw Error(ErrorCode::PlatformUnavailable,
                "status " + std::to_string(res.status) + " on " + target);
  }
  json j = parse_payload(res, target);
  IssueData out;
  out.number = j.value("number", number);
  out.is_pull_request = j.contains("pull_request");
  out.title = j.value("title", "");
  out.body = j["body"].is_string() ? j["body"].get<std::string>() : "";
  out.author = j.contains("user") && j["user"].is_object()
                   ? j["user"].value("login", "")
                   : "";
  out.created_at = j.value("created_at", "");
  out.html_url = j.value("html_url", "");

  for (int page = 1; page <= options_.max_pages; ++page) {
    auto page_target = target + "/comments?per_page=100&page=" + std::to_string(page);
    auto page_res = get(page_target);
    if (page_res.status == 404) break;
    json comments = parse_payload(page_res, page_target);
    if (!comments.is_array() || comments.empty()) break;
    for (const auto& c : comments) out.comments.push_back(comment_from(c));
    if (comments.size() < 100) break;
  }
  return out;
}

std::vector<ReviewComment> GithubClient::fetch_review_comments(
    const std::string& repo_slug, long pr_number) {
  std::vector<ReviewComment> out;
  for (int page = 1; page <= options_.max_pages; ++page) {
    auto target = "/repos/" + repo_slug + "/pulls/" + std::to_string(pr_number) +
                  "/comments?per_page=100&page=" + std::to_string(page);
    auto res = get(target);
    if (res.status == 404) break;
    json j = parse_payload(res, target);
    if (!j.is_array() || j.empty()) break;
    for (const auto& c : j) {
      ReviewComment rc;
      rc.id = c.value("id", 0L);
      rc.thread_root =
          c.contains("in_reply_to_id") && c["in_reply_to_id"].is_number()
              ? c["in_reply_to_id"].get<long>()
              : rc.id;
      rc.author = c.contains("user") && c["user"].is_object()
                      ? c["user"].value("login", "")
                      : "";
      rc.created_at = c.value("created_at", "");
      rc.body = c.value("body", "");
      out.push_back(std::move(rc));
    }
    if (j.size() < 100) break;
  }
  return out;
}

std::vector<SearchHit> GithubClient::search_commit_mentions(
    const std::string& repo_slug, const std::string& sha) {
  auto target = "/search/issues?q=" + url_encode_component(sha + " repo:" + repo_slug) +
                "&per_page=100";
  auto res = get(target);
  if (res.status == 404 || res.status == 422) return {};
  json j = parse_payload(res, target);
  std::vector<SearchHit> out;
  if (j.contains("items") && j["items"].is_array()) {
    for (const auto& item : j["items"]) {
      SearchHit hit;
      hit.number = item.value("number", 0L);
      hit.is_pull_request = item.contains("pull_request");
      if (hit.number > 0) out.push_back(hit);
    }
  }
  return out;
}

std::optional<std::string> GithubClient::fetch_file(const std::string& repo_slug,
                                                    const std::string& path,
                                                    const std::string& ref) {
  auto target = "/repos/" + repo_slug + "/contents/" + path +
                "?ref=" + url_encode_component(ref);
  auto res = get(target);
  if (res.status == 404) return std::nullopt;
  if (res.status != 200) {
    throw Error(ErrorCode::PlatformUnavailable,
                "status " + std::to_string(res.status) + " on " + target);
  }
  json j = parse_payload(res, target);
  if (j.value("encoding", "") == "base64") {
    return decode_base64(j.value("content", ""));
  }
  return j.value("content", "");
}

}  // namespace rforge
