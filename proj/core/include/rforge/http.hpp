#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rforge/rec_store.hpp"

namespace rforge {

struct HttpRequest {
  std::string method = "GET";
  std::string host;    // e.g. api.github.com
  std::string target;  // path plus query, e.g. /search/issues?q=...
  std::map<std::string, std::string> headers;
  std::string body;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

class HttpClient {
 public:
  virtual ~HttpClient() = default;
  virtual HttpResponse send(const HttpRequest& req) = 0;
};

/// TLS client backed by cpp-httplib; one connection per host, reused.
class LiveHttpClient : public HttpClient {
 public:
  explicit LiveHttpClient(int timeout_seconds = 30);
  ~LiveHttpClient() override;
  HttpResponse send(const HttpRequest& req) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Deterministic failure behavior for flaky transports: a fixed schedule
/// of waits between attempts, then a hard error.
struct RetryPolicy {
  std::vector<std::chrono::milliseconds> delays = {
      std::chrono::milliseconds(1000), std::chrono::milliseconds(2000),
      std::chrono::milliseconds(4000)};
  std::function<void(std::chrono::milliseconds)> sleep;  // injectable for tests

  void wait(size_t attempt) const;
};

/// Token bucket limiting request rate toward the live platform.
class TokenBucket {
 public:
  TokenBucket(double capacity, double refill_per_second);
  void acquire();

 private:
  double capacity_;
  double refill_per_second_;
  double tokens_;
  std::chrono::steady_clock::time_point last_;
  std::mutex mutex_;
};

/// Record/replay wrapper. Keys are http_request_key(method, host, target);
/// recordings live under <cache_dir>/http/<key>.rec and hold the request
/// line, the stored headers subset and the response body.
/// Replay misses raise PlatformUnavailable; Off passes straight through.
class CachedHttpClient : public HttpClient {
 public:
  CachedHttpClient(std::shared_ptr<HttpClient> inner, std::string cache_dir,
                   CacheMode mode);
  HttpResponse send(const HttpRequest& req) override;

  CacheMode mode() const { return mode_; }

 private:
  std::shared_ptr<HttpClient> inner_;
  RecStore store_;
  CacheMode mode_;
};

}  // namespace rforge
