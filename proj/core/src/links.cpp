#include "rforge/links.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rforge {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct RawMatch {
  size_t pos = 0;
  size_t len = 0;
  long number = 0;
  std::optional<ArtifactKind> kind_hint;
  bool foreign = false;  // span is claimed but yields no candidate
};

size_t digits_at(const std::string& text, size_t pos, long* number) {
  size_t i = pos;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == pos) return 0;
  // A digit run followed by a word character is an alien token (#123abc).
  if (i < text.size() && is_word_char(text[i])) return 0;
  long value = 0;
  for (size_t k = pos; k < i; ++k) {
    if (value > 100000000L) break;  // clamp; platform numbers are small
    value = value * 10 + (text[k] - '0');
  }
  *number = value;
  return i - pos;
}

bool boundary_before(const std::string& text, size_t pos) {
  return pos == 0 || !is_word_char(text[pos - 1]);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// https?://host/owner/name/(issues|pull)/N
std::optional<RawMatch> match_url(const std::string& text, size_t pos,
                                  const std::string& repo_slug) {
  auto starts = [&](const char* prefix) {
    return text.compare(pos, std::char_traits<char>::length(prefix), prefix) == 0;
  };
  if (!starts("http://") && !starts("https://")) return std::nullopt;
  size_t i = text.find("://", pos) + 3;
  std::vector<std::string> segments;
  std::string cur;
  size_t end = i;
  while (end < text.size()) {
    char c = text[end];
    if (c == '/' ) {
      segments.push_back(cur);
      cur.clear();
      ++end;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ')' || c == ']' ||
        c == '>' || c == '"' || c == '\'') {
      break;
    }
    cur += c;
    ++end;
    // host/owner/name/kind/number is all we need; stop growing after that
    if (segments.size() == 4 && !is_digit(c)) break;
  }
  if (!cur.empty()) segments.push_back(cur);
  if (segments.size() < 4) return std::nullopt;
  const std::string& owner = segments[1];
  const std::string& name = segments[2];
  const std::string& kind = segments[3];
  if (kind != "issues" && kind != "pull") return std::nullopt;
  if (segments.size() < 5) return std::nullopt;
  std::string num = segments[4];
  while (!num.empty() && !is_digit(num.back())) num.pop_back();
  if (num.empty() || !std::all_of(num.begin(), num.end(), is_digit)) {
    return std::nullopt;
  }
  RawMatch m;
  m.pos = pos;
  // Token ends right after the number.
  size_t num_pos = text.find(num, text.find("/" + kind + "/", pos));
  m.len = num_pos + num.size() - pos;
  m.number = std::stol(num);
  m.kind_hint = kind == "pull" ? ArtifactKind::PullRequest : ArtifactKind::Issue;
  m.foreign = lower(owner + "/" + name) != lower(repo_slug);
  return m;
}

}  // namespace

std::vector<LinkCandidate> extract_artifact_refs(const std::string& text,
                                                 const std::string& repo_slug) {
  std::vector<RawMatch> matches;

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'h') {
      if (auto m = match_url(text, i, repo_slug)) {
        matches.push_back(*m);
        i += m->len - 1;
        continue;
      }
    }
    if (c == '#') {
      if (i > 0 && (is_word_char(text[i - 1]) || text[i - 1] == '&')) continue;
      long number = 0;
      size_t n = digits_at(text, i + 1, &number);
      if (n > 0) {
        matches.push_back(RawMatch{i, 1 + n, number, std::nullopt, false});
      }
      continue;
    }
    if (c == 'p' && boundary_before(text, i) && text.compare(i, 5, "pull/") == 0) {
      long number = 0;
      size_t n = digits_at(text, i + 5, &number);
      if (n > 0) {
        matches.push_back(
            RawMatch{i, 5 + n, number, ArtifactKind::PullRequest, false});
      }
      continue;
    }
    if (c == 'i' && boundary_before(text, i) && text.compare(i, 7, "issues/") == 0) {
      long number = 0;
      size_t n = digits_at(text, i + 7, &number);
      if (n > 0) {
        matches.push_back(RawMatch{i, 7 + n, number, ArtifactKind::Issue, false});
      }
      continue;
    }
    if (c == 'G' && boundary_before(text, i) && text.compare(i, 3, "GH-") == 0) {
      long number = 0;
      size_t n = digits_at(text, i + 3, &number);
      if (n > 0) {
        matches.push_back(RawMatch{i, 3 + n, number, std::nullopt, false});
      }
      continue;
    }
  }

  std::sort(matches.begin(), matches.end(), [](const RawMatch& a, const RawMatch& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.len > b.len;
  });

  std::vector<LinkCandidate> out;
  std::set<long> seen;
  size_t claimed_until = 0;
  for (const auto& m : matches) {
    if (m.pos < claimed_until) continue;  // inside an earlier match (e.g. a URL)
    claimed_until = m.pos + m.len;
    if (m.foreign) continue;
    if (seen.count(m.number)) continue;
    seen.insert(m.number);
    LinkCandidate cand;
    cand.raw_token = text.substr(m.pos, m.len);
    cand.number = m.number;
    cand.kind_hint = m.kind_hint;
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<std::string> find_sha_mentions(const std::string& text,
                                           const std::string& sha,
                                           size_t min_prefix) {
  std::vector<std::string> out;
  if (sha.empty() || min_prefix == 0) return out;
  auto is_hex = [](char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
  };
  for (size_t i = 0; i < text.size();) {
    if (!is_hex(text[i]) || (i > 0 && is_word_char(text[i - 1]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_hex(text[j])) ++j;
    size_t len = j - i;
    if (len >= min_prefix && len <= sha.size() &&
        (j == text.size() || !is_word_char(text[j]))) {
      std::string token = lower(text.substr(i, len));
      if (sha.compare(0, len, token) == 0) {
        out.push_back(text.substr(i, len));
      }
    }
    i = j + 1;
  }
  return out;
}

}  // namespace rforge
