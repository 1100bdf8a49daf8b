#include "rforge/http.hpp"

#include <thread>

#include <httplib.h>

#include "rforge/errors.hpp"
#include "rforge/hashing.hpp"

namespace rforge {

struct LiveHttpClient::Impl {
  int timeout_seconds;
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<httplib::SSLClient>> clients;

  httplib::SSLClient& client_for(const std::string& host) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = clients.find(host);
    if (it == clients.end()) {
      auto c = std::make_unique<httplib::SSLClient>(host);
      c->set_connection_timeout(timeout_seconds);
      c->set_read_timeout(timeout_seconds);
      c->enable_server_certificate_verification(true);
      it = clients.emplace(host, std::move(c)).first;
    }
    return *it->second;
  }
};

LiveHttpClient::LiveHttpClient(int timeout_seconds)
    : impl_(std::make_unique<Impl>()) {
  impl_->timeout_seconds = timeout_seconds;
}

LiveHttpClient::~LiveHttpClient() = default;

HttpResponse LiveHttpClient::send(const HttpRequest& req) {
  auto& client = impl_->client_for(req.host);
  httplib::Headers headers(req.headers.begin(), req.headers.end());
  httplib::Result res;
  if (req.method == "GET") {
    res = client.Get(req.target, headers);
  } else if (req.method == "POST") {
    std::string content_type = "application/json";
    if (auto it = req.headers.find("content-type"); it != req.headers.end()) {
      content_type = it->second;
    }
    res = client.Post(req.target, headers, req.body, content_type);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unsupported method " + req.method);
  }
  if (!res) {
    throw Error(ErrorCode::PlatformUnavailable,
                "transport failure for " + req.method + " " + req.host + req.target);
  }
  return HttpResponse{res->status, res->body};
}

void RetryPolicy::wait(size_t attempt) const {
  if (attempt >= delays.size()) return;
  auto d = delays[attempt];
  if (sleep) {
    sleep(d);
  } else {
    std::this_thread::sleep_for(d);
  }
}

TokenBucket::TokenBucket(double capacity, double refill_per_second)
    : capacity_(capacity),
      refill_per_second_(refill_per_second),
      tokens_(capacity),
      last_(std::chrono::steady_clock::now()) {}

void TokenBucket::acquire() {
  while (true) {
    std::chrono::milliseconds wait{0};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto now = std::chrono::steady_clock::now();
      double elapsed = std::chrono::duration<double>(now - last_).count();
      last_ = now;
      tokens_ = std::min(capacity_, tokens_ + elapsed * refill_per_second_);
      if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return;
      }
      double deficit = 1.0 - tokens_;
      wait = std::chrono::milliseconds(
          static_cast<long>(1000.0 * deficit / refill_per_second_) + 1);
    }
    std::this_thread::sleep_for(wait);
  }
}

CachedHttpClient::CachedHttpClient(std::shared_ptr<HttpClient> inner,
                                   std::string cache_dir, CacheMode mode)
    : inner_(std::move(inner)), store_(std::move(cache_dir), "http"), mode_(mode) {}

HttpResponse CachedHttpClient::send(const HttpRequest& req) {
  if (mode_ == CacheMode::Off) return inner_->send(req);

  const std::string key = http_request_key(req.method, req.host, req.target);
  if (mode_ == CacheMode::Replay) {
    auto rec = store_.get(key);
    if (!rec) {
      throw Error(ErrorCode::PlatformUnavailable,
                  "replay miss for " + req.method + " " + req.host + req.target +
                      " (key " + key + ")");
    }
    return HttpResponse{(*rec)["status"].get<int>(),
                        (*rec)["body"].get<std::string>()};
  }

  // Record mode: reuse an existing recording so repeated runs stay cheap
  // and deterministic.
  if (auto rec = store_.get(key)) {
    return HttpResponse{(*rec)["status"].get<int>(),
                        (*rec)["body"].get<std::string>()};
  }
  HttpResponse res = inner_->send(req);
  json headers = json::object();
  if (auto it = req.headers.find("accept"); it != req.headers.end()) {
    headers["accept"] = it->second;
  }
  store_.put(key, json{{"request_line", req.method + " " + req.host + req.target},
                       {"headers", headers},
                       {"status", res.status},
                       {"body", res.body}});
  return res;
}

}  // namespace rforge
