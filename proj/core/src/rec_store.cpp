#include "rforge/rec_store.hpp"

#include <filesystem>

#include "rforge/errors.hpp"

namespace rforge {

const char* cache_mode_name(CacheMode m) {
  switch (m) {
    case CacheMode::Record:
      return "record";
    case CacheMode::Replay:
      return "replay";
    default:
      return "off";
  }
}

std::optional<CacheMode> parse_cache_mode(const std::string& name) {
  if (name == "record") return CacheMode::Record;
  if (name == "replay") return CacheMode::Replay;
  if (name == "off" || name == "live") return CacheMode::Off;
  return std::nullopt;
}

std::string RecStore::path_for(const std::string& key) const {
  return (std::filesystem::path(root_) / bucket_ / (key + ".rec")).string();
}

std::optional<json> RecStore::get(const std::string& key) const {
  auto path = path_for(key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  auto text = read_text_file(path);
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::SchemaViolation, "corrupt recording " + path);
  }
  return j;
}

void RecStore::put(const std::string& key, const json& record) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  write_text_file(path_for(key), canonical_dump(record));
}

bool RecStore::contains(const std::string& key) const {
  return std::filesystem::exists(path_for(key));
}

}  // namespace rforge
