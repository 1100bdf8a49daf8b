#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "rforge/serialization.hpp"

namespace rforge {

enum class CacheMode { Record, Replay, Off };

const char* cache_mode_name(CacheMode m);
std::optional<CacheMode> parse_cache_mode(const std::string& name);

/// One-file-per-recording store under <root>/<bucket>/<key>.rec. Each
/// .rec holds a canonical JSON document pairing the request with its raw
/// response. Writes are serialized; reads are lock-free.
class RecStore {
 public:
  RecStore(std::string root, std::string bucket)
      : root_(std::move(root)), bucket_(std::move(bucket)) {}

  std::optional<json> get(const std::string& key) const;
  void put(const std::string& key, const json& record);
  bool contains(const std::string& key) const;

  std::string path_for(const std::string& key) const;

 private:
  std::string root_;
  std::string bucket_;
  std::mutex write_mutex_;
};

}  // namespace rforge
