#include "rforge/segmenter.hpp"

#include <algorithm>
#include <cctype>

namespace rforge {

namespace {

const char kClosers[] = "\"')]";

bool is_closer(char c) {
  for (const char* p = kClosers; *p; ++p) {
    if (*p == c) return true;
  }
  return false;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

bool is_blank_line(const std::string& line) {
  return std::all_of(line.begin(), line.end(), is_space);
}

std::string lstrip(const std::string& line) {
  size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  return line.substr(i);
}

bool is_heading(const std::string& line) {
  std::string s = lstrip(line);
  size_t i = 0;
  while (i < s.size() && s[i] == '#') ++i;
  return i >= 1 && i <= 6 && i < s.size() && s[i] == ' ';
}

// "- x", "* x", "+ x", "12. x", "12) x"
bool is_list_item(const std::string& line) {
  std::string s = lstrip(line);
  if (s.size() >= 2 && (s[0] == '-' || s[0] == '*' || s[0] == '+') && s[1] == ' ') {
    return true;
  }
  size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0 || i > 4) return false;
  return i < s.size() && (s[i] == '.' || s[i] == ')') && i + 1 < s.size() &&
         s[i + 1] == ' ';
}

// Marker prefix length (through the trailing spaces) of a list-item line.
size_t list_marker_len(const std::string& s) {
  size_t m = 0;
  if (s[0] == '-' || s[0] == '*' || s[0] == '+') {
    m = 1;
  } else {
    while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
    ++m;  // '.' or ')'
  }
  while (m < s.size() && s[m] == ' ') ++m;
  return m;
}

std::vector<std::string> split_terminators(const std::string& buf,
                                           const SegmenterConfig& cfg) {
  std::vector<std::string> out;
  size_t start = 0;
  size_t i = 0;
  while (i < buf.size()) {
    char c = buf[i];
    if (c == '.' || c == '!' || c == '?') {
      size_t j = i + 1;
      while (j < buf.size() && is_closer(buf[j])) ++j;
      bool boundary = j >= buf.size() || is_space(buf[j]);
      if (boundary && c == '.') {
        size_t k = i;
        while (k > 0 && !is_space(buf[k - 1])) --k;
        std::string token = lower(buf.substr(k, i + 1 - k));
        if (cfg.abbreviations.count(token)) {
          boundary = false;
        } else if (token.size() == 2 &&
                   std::isalpha(static_cast<unsigned char>(token[0]))) {
          boundary = false;  // personal initial, "J."
        } else if (i > 0 && buf[i - 1] == '.') {
          // Ellipsis splits only before an evident new sentence.
          size_t nxt = j;
          while (nxt < buf.size() && is_space(buf[nxt])) ++nxt;
          if (nxt < buf.size() &&
              !(std::isupper(static_cast<unsigned char>(buf[nxt])) ||
                std::isdigit(static_cast<unsigned char>(buf[nxt])))) {
            boundary = false;
          }
        }
      }
      if (boundary) {
        std::string s = trim(buf.substr(start, j - start));
        if (!s.empty()) out.push_back(std::move(s));
        start = j;
        i = j;
        continue;
      }
    }
    ++i;
  }
  if (start < buf.size()) {
    std::string s = trim(buf.substr(start));
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::set<std::string> SegmenterConfig::default_abbreviations() {
  return {"e.g.", "i.e.", "etc.", "vs.", "dr.",   "fig.", "no.",
          "cf.",  "al.",  "mr.",  "ms.", "prof.", "p.m.", "a.m."};
}

std::vector<std::string> segment_text(const std::string& text,
                                      const SegmenterConfig& cfg) {
  SegmenterConfig normalized = cfg;
  {
    std::set<std::string> folded;
    for (const auto& a : cfg.abbreviations) folded.insert(lower(a));
    normalized.abbreviations = std::move(folded);
  }

  std::vector<std::string> sentences;
  std::string buf;
  auto flush = [&] {
    for (auto& s : split_terminators(buf, normalized)) sentences.push_back(std::move(s));
    buf.clear();
  };

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  for (const auto& line : lines) {
    if (is_blank_line(line)) {
      flush();
      continue;
    }
    if (normalized.treat_newline_as_boundary && is_heading(line)) {
      flush();
      for (auto& s : split_terminators(trim(line), normalized)) {
        sentences.push_back(std::move(s));
      }
      continue;
    }
    if (normalized.treat_newline_as_boundary && is_list_item(line)) {
      flush();
      std::string s = trim(line);
      size_t m = list_marker_len(s);
      auto parts = split_terminators(s.substr(m), normalized);
      if (parts.empty()) {
        sentences.push_back(s);
      } else {
        parts[0] = s.substr(0, m) + parts[0];
        for (auto& p : parts) sentences.push_back(std::move(p));
      }
      continue;
    }
    if (buf.empty()) {
      buf = trim(line);
    } else {
      buf += " " + trim(line);
    }
  }
  flush();

  // Sentences shorter than the minimum merge into a neighbor.
  std::vector<std::string> merged;
  std::string pending;
  for (auto& s : sentences) {
    if (!pending.empty()) {
      s = pending + " " + s;
      pending.clear();
    }
    if (static_cast<int>(s.size()) < normalized.min_sentence_chars && !merged.empty()) {
      merged.back() += " " + s;
    } else if (static_cast<int>(s.size()) < normalized.min_sentence_chars) {
      pending = s;
    } else {
      merged.push_back(std::move(s));
    }
  }
  if (!pending.empty()) {
    if (!merged.empty()) {
      merged.back() += " " + pending;
    } else {
      merged.push_back(pending);  // no neighbor to merge into
    }
  }
  return merged;
}

std::vector<Sentence> segment(const Artifact& artifact, const SegmenterConfig& cfg) {
  std::vector<Sentence> out;
  int ordinal = 0;
  for (const auto& block : artifact.body_blocks) {
    for (auto& text : segment_text(block.text, cfg)) {
      out.push_back(Sentence{artifact.ref, ordinal++, std::move(text)});
    }
  }
  return out;
}

}  // namespace rforge
