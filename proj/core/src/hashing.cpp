#include "rforge/hashing.hpp"

#include <openssl/sha.h>

#include <array>

namespace rforge {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(),
         digest.data());
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (unsigned char b : digest) {
    out += hex[b >> 4];
    out += hex[b & 0xf];
  }
  return out;
}

namespace {

void append_be64(std::string& buf, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    buf += static_cast<char>((v >> shift) & 0xff);
  }
}

void append_field(std::string& buf, const std::string& field) {
  append_be64(buf, field.size());
  buf += field;
}

}  // namespace

std::string request_fingerprint(const std::string& kind, const std::string& model_id,
                                const std::string& system_text,
                                const std::string& user_text,
                                std::uint64_t run_index) {
  std::string preimage;
  preimage.reserve(kind.size() + model_id.size() + system_text.size() +
                   user_text.size() + 5 * 8);
  append_field(preimage, kind);
  append_field(preimage, model_id);
  append_field(preimage, system_text);
  append_field(preimage, user_text);
  append_be64(preimage, run_index);
  return sha256_hex(preimage);
}

std::string http_request_key(const std::string& method, const std::string& host,
                             const std::string& target) {
  return sha256_hex(method + " " + host + " " + target + "\n");
}

}  // namespace rforge
