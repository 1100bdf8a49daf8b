#pragma once

#include <cstdint>
#include <string>

namespace rforge {

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(const std::string& data);

/// Fingerprint of a chat or embedding request. The preimage is, for each
/// of (kind, model_id, system_text, user_text): an 8-byte big-endian
/// length followed by the raw bytes, then run_index as an 8-byte
/// big-endian integer. Length prefixes keep the encoding injective, so
/// the fingerprint can be recomputed with any external SHA-256 tool.
std::string request_fingerprint(const std::string& kind, const std::string& model_id,
                                const std::string& system_text,
                                const std::string& user_text, std::uint64_t run_index);

/// Cache key for an HTTP request: SHA-256 of "METHOD SP host SP target LF".
/// Auth headers are deliberately not part of the key.
std::string http_request_key(const std::string& method, const std::string& host,
                             const std::string& target);

}  // namespace rforge
