#pragma once

#include <map>
#include <string>
#include <vector>

#include "rforge/diff.hpp"
#include "rforge/model.hpp"

namespace rforge {

enum class CommentLevel { Class, Method, Inline };

const char* comment_level_name(CommentLevel level);

/// One comment found in a Java source file. `begin`/`end` are byte
/// offsets into the source ([begin, end)); `text` has delimiters and
/// leading asterisks stripped.
struct JavaCommentSpan {
  std::string file_path;
  size_t begin = 0;
  size_t end = 0;
  CommentLevel level = CommentLevel::Inline;
  std::string attached_symbol;  // class/method name; empty for Inline
  std::string text;

  bool operator==(const JavaCommentSpan&) const = default;
};

struct RawCommentSpan {
  size_t begin = 0;
  size_t end = 0;
  bool line = false;     // // comment
  bool javadoc = false;  // /** ... */
  int first_line = 0;    // 1-based
  int last_line = 0;

  bool operator==(const RawCommentSpan&) const = default;
};

/// Lexical pass over Java source with a four-state scanner (code,
/// string, char, comment). Tolerates files that do not parse; never
/// throws. Spans are pairwise disjoint and in source order.
std::vector<RawCommentSpan> scan_comment_spans(const std::string& source);

/// Extracts rationale-bearing comments from one file:
///   - Javadoc blocks attached to type declarations (Class level) and to
///     method/constructor declarations (Method level), change or no change;
///   - comments inside method bodies (Inline level), but only when the
///     method's line span intersects `changed_line_ranges`.
/// A Javadoc attaches to the next declaration when separated only by
/// whitespace and annotations. Comments before the `package` declaration
/// (license headers) are excluded. Field Javadocs and comments outside
/// method bodies are not extracted.
std::vector<JavaCommentSpan> extract_comments(
    const std::string& java_source, const std::vector<LineRange>& changed_line_ranges,
    const std::string& file_path = "");

/// Per changed Java file: at most one ClassJavadoc, one MethodJavadoc and
/// one InlineComment artifact, each aggregating that file's spans of the
/// level as ordered body blocks. Throws MissingSource when a changed
/// Java path is absent from `sources`.
std::vector<Artifact> comment_artifacts(const Commit& commit,
                                        const std::map<std::string, std::string>& sources);

}  // namespace rforge
