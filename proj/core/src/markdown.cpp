#include "rforge/markdown.hpp"

#include <sstream>
#include <vector>

namespace rforge {

namespace {

std::string lstripped(const std::string& s) {
  size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

bool is_fence(const std::string& line) {
  auto t = lstripped(line);
  return t.rfind("```", 0) == 0 || t.rfind("~~~", 0) == 0;
}

bool is_blockquote(const std::string& line) {
  return lstripped(line).rfind(">", 0) == 0;
}

std::string blockquote_content(const std::string& line) {
  auto t = lstripped(line);
  size_t i = 0;
  while (i < t.size() && (t[i] == '>' || t[i] == ' ')) ++i;
  return t.substr(i);
}

bool looks_like_diff(const std::string& content) {
  return content.rfind("@@", 0) == 0 || content.rfind("+++", 0) == 0 ||
         content.rfind("---", 0) == 0 || content.rfind("diff --git", 0) == 0;
}

std::string strip_inline_code(const std::string& line) {
  std::string out;
  out.reserve(line.size());
  for (char c : line) {
    if (c != '`') out += c;
  }
  return out;
}

}  // namespace

std::string clean_markdown(const std::string& text) {
  std::string normalized;
  normalized.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      normalized += '\n';
    } else {
      normalized += text[i];
    }
  }

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : normalized) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  std::vector<std::string> kept;
  bool in_fence = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_fence(line)) {
      in_fence = !in_fence;
      continue;
    }
    if (in_fence) continue;

    if (is_blockquote(line)) {
      size_t j = i;
      bool diffish = false;
      while (j < lines.size() && is_blockquote(lines[j])) {
        if (looks_like_diff(blockquote_content(lines[j]))) diffish = true;
        ++j;
      }
      if (diffish) {
        i = j - 1;
        continue;
      }
      // Ordinary quote: keep the quoted words, drop the marker.
      kept.push_back(strip_inline_code(blockquote_content(line)));
      continue;
    }
    kept.push_back(strip_inline_code(line));
  }

  std::string out;
  for (size_t i = 0; i < kept.size(); ++i) {
    if (i) out += '\n';
    out += kept[i];
  }
  // Collapse leading/trailing blank lines left behind by removed blocks.
  size_t b = 0, e = out.size();
  while (b < e && (out[b] == '\n' || out[b] == ' ' || out[b] == '\t')) ++b;
  while (e > b && (out[e - 1] == '\n' || out[e - 1] == ' ' || out[e - 1] == '\t')) --e;
  return out.substr(b, e - b);
}

}  // namespace rforge
