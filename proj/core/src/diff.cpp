#include "rforge/diff.hpp"

#include <cstdlib>
#include <sstream>

namespace rforge {

namespace {

// "+++ b/path" or "+++ path"; "/dev/null" means a deleted file.
std::string path_from_plus_header(const std::string& line) {
  std::string p = line.substr(4);
  if (auto tab = p.find('\t'); tab != std::string::npos) p = p.substr(0, tab);
  while (!p.empty() && (p.back() == '\r' || p.back() == ' ')) p.pop_back();
  if (p.rfind("b/", 0) == 0) p = p.substr(2);
  return p;
}

bool parse_hunk_header(const std::string& line, int* post_start, int* post_count) {
  // @@ -a,b +c,d @@  (counts default to 1 when omitted)
  if (line.rfind("@@", 0) != 0) return false;
  auto plus = line.find('+');
  if (plus == std::string::npos) return false;
  const char* s = line.c_str() + plus + 1;
  char* end = nullptr;
  long start = std::strtol(s, &end, 10);
  if (end == s) return false;
  long count = 1;
  if (*end == ',') {
    const char* cs = end + 1;
    count = std::strtol(cs, &end, 10);
    if (end == cs) return false;
  }
  *post_start = static_cast<int>(start);
  *post_count = static_cast<int>(count);
  return true;
}

}  // namespace

std::vector<FileDiff> parse_unified_diff(const std::string& diff_text) {
  std::vector<FileDiff> files;
  FileDiff* cur = nullptr;
  bool in_hunk = false;

  std::istringstream in(diff_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("+++ ", 0) == 0) {
      std::string path = path_from_plus_header(line);
      if (path == "/dev/null") {
        // Deleted file: keep a record so removed counts still land somewhere.
        files.push_back(FileDiff{});
        cur = &files.back();
      } else {
        files.push_back(FileDiff{path, 0, 0, {}});
        cur = &files.back();
      }
      in_hunk = false;
      continue;
    }
    if (line.rfind("--- ", 0) == 0 && !in_hunk) {
      // Pre-image header for a deleted file carries the only usable path.
      if (cur == nullptr || !cur->path.empty()) continue;
      std::string p = line.substr(4);
      if (auto tab = p.find('\t'); tab != std::string::npos) p = p.substr(0, tab);
      if (p.rfind("a/", 0) == 0) p = p.substr(2);
      if (cur && cur->path.empty() && p != "/dev/null") cur->path = p;
      continue;
    }
    if (cur == nullptr) continue;

    int post_start = 0, post_count = 0;
    if (parse_hunk_header(line, &post_start, &post_count)) {
      in_hunk = true;
      if (post_count > 0) {
        cur->post_ranges.push_back(LineRange{post_start, post_start + post_count - 1});
      }
      continue;
    }
    if (!in_hunk) continue;
    if (line.rfind("+", 0) == 0) {
      ++cur->added;
    } else if (line.rfind("-", 0) == 0) {
      ++cur->removed;
    }
  }

  // Drop header-only records that never got a path (pure /dev/null pairs).
  std::vector<FileDiff> out;
  for (auto& f : files) {
    if (!f.path.empty()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<ChangedFile> changed_files_from_diff(const std::string& diff_text) {
  std::vector<ChangedFile> out;
  for (const auto& f : parse_unified_diff(diff_text)) {
    out.push_back(ChangedFile{f.path, classify_language(f.path), f.added, f.removed});
  }
  return out;
}

std::vector<LineRange> post_image_ranges(const std::string& diff_text,
                                         const std::string& path) {
  for (const auto& f : parse_unified_diff(diff_text)) {
    if (f.path == path) return f.post_ranges;
  }
  return {};
}

}  // namespace rforge
