#pragma once

#include <string>
#include <vector>

#include "rforge/model.hpp"

namespace rforge {

struct LineRange {
  int first = 0;  // 1-based, inclusive
  int last = 0;   // inclusive

  bool intersects(const LineRange& o) const {
    return first <= o.last && o.first <= last;
  }
  bool operator==(const LineRange&) const = default;
};

struct FileDiff {
  std::string path;
  int added = 0;
  int removed = 0;
  /// Post-image line ranges touched by hunks, in file order.
  std::vector<LineRange> post_ranges;
};

/// Minimal unified-diff reader. Recognizes `+++ b/<path>` / `diff --git`
/// file headers and `@@ -a,b +c,d @@` hunk headers; everything else is
/// passed over. Tolerates truncated or slightly malformed input.
std::vector<FileDiff> parse_unified_diff(const std::string& diff_text);

/// Changed-file list derived from a diff (language tag from the path).
std::vector<ChangedFile> changed_files_from_diff(const std::string& diff_text);

/// Post-image ranges for one path, empty if the path is absent.
std::vector<LineRange> post_image_ranges(const std::string& diff_text,
                                         const std::string& path);

}  // namespace rforge
