#include "rforge/comments.hpp"

#include <algorithm>
#include <cctype>

#include "rforge/errors.hpp"

namespace rforge {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

struct ScanResult {
  std::vector<RawCommentSpan> comments;
  std::string masked;  // comments and string/char literals blanked out
};

ScanResult scan(const std::string& src) {
  enum class State { Code, Str, Chr, LineComment, BlockComment };
  ScanResult out;
  out.masked = src;
  State state = State::Code;
  size_t comment_begin = 0;
  int comment_first_line = 0;
  bool comment_javadoc = false;
  int line = 1;

  auto blank = [&](size_t i) {
    if (out.masked[i] != '\n') out.masked[i] = ' ';
  };

  for (size_t i = 0; i < src.size(); ++i) {
    char c = src[i];
    char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (state) {
      case State::Code:
        if (c == '/' && next == '/') {
          state = State::LineComment;
          comment_begin = i;
          comment_first_line = line;
          blank(i);
        } else if (c == '/' && next == '*') {
          state = State::BlockComment;
          comment_begin = i;
          comment_first_line = line;
          // "/**" opens a Javadoc unless it is the degenerate "/**/".
          comment_javadoc = i + 2 < src.size() && src[i + 2] == '*' &&
                            !(i + 3 < src.size() && src[i + 3] == '/');
          blank(i);
          blank(i + 1);
          ++i;
        } else if (c == '"') {
          state = State::Str;
          blank(i);
        } else if (c == '\'') {
          state = State::Chr;
          blank(i);
        }
        break;
      case State::Str:
        blank(i);
        if (c == '\\') {
          if (i + 1 < src.size()) {
            blank(i + 1);
            ++i;
          }
        } else if (c == '"') {
          state = State::Code;
        } else if (c == '\n') {
          state = State::Code;  // unterminated string: resync at newline
        }
        break;
      case State::Chr:
        blank(i);
        if (c == '\\') {
          if (i + 1 < src.size()) {
            blank(i + 1);
            ++i;
          }
        } else if (c == '\'') {
          state = State::Code;
        } else if (c == '\n') {
          state = State::Code;
        }
        break;
      case State::LineComment:
        if (c == '\n') {
          out.comments.push_back(RawCommentSpan{comment_begin, i, true, false,
                                                comment_first_line, line});
          state = State::Code;
        } else {
          blank(i);
        }
        break;
      case State::BlockComment:
        blank(i);
        if (c == '*' && next == '/' && i >= comment_begin + 2) {
          blank(i + 1);
          out.comments.push_back(RawCommentSpan{comment_begin, i + 2, false,
                                                comment_javadoc, comment_first_line,
                                                line});
          ++i;
          state = State::Code;
        }
        break;
    }
    if (c == '\n') ++line;
  }
  if (state == State::LineComment) {
    out.comments.push_back(
        RawCommentSpan{comment_begin, src.size(), true, false, comment_first_line, line});
  } else if (state == State::BlockComment) {
    out.comments.push_back(RawCommentSpan{comment_begin, src.size(), false,
                                          comment_javadoc, comment_first_line, line});
  }
  return out;
}

std::string strip_comment_text(const std::string& src, const RawCommentSpan& span) {
  std::string raw = src.substr(span.begin, span.end - span.begin);
  std::string body;
  if (span.line) {
    body = raw.substr(2);
  } else {
    size_t lead = raw.rfind("/**", 0) == 0 && raw.size() > 4 ? 3 : 2;
    size_t tail = raw.size() >= lead + 2 && raw.compare(raw.size() - 2, 2, "*/") == 0
                      ? raw.size() - 2
                      : raw.size();
    if (tail < lead) tail = lead;
    body = raw.substr(lead, tail - lead);
  }

  // Per-line: strip leading whitespace and one decorative '*'.
  std::vector<std::string> lines;
  std::string cur;
  for (char c : body) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);
  std::string joined;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string l = lines[i];
    size_t p = 0;
    while (p < l.size() && (l[p] == ' ' || l[p] == '\t')) ++p;
    if (p < l.size() && l[p] == '*' && (p + 1 == l.size() || l[p + 1] != '/')) {
      ++p;
      if (p < l.size() && l[p] == ' ') ++p;
    }
    if (i) joined += '\n';
    joined += l.substr(p);
  }
  // Trim outer whitespace.
  size_t b = joined.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  size_t e = joined.find_last_not_of(" \t\n");
  return joined.substr(b, e - b + 1);
}

size_t skip_ws(const std::string& s, size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Skips "@Ident" or "@Ident(...)"; returns npos when it is the
// `@interface` keyword (that is a declaration, not an annotation).
size_t skip_annotation(const std::string& s, size_t i) {
  size_t j = i + 1;
  size_t word_start = j;
  while (j < s.size() && ident_char(s[j])) ++j;
  if (s.compare(word_start, j - word_start, "interface") == 0) {
    return std::string::npos;
  }
  j = skip_ws(s, j);
  if (j < s.size() && s[j] == '(') {
    int depth = 0;
    while (j < s.size()) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') {
        --depth;
        if (depth == 0) {
          ++j;
          break;
        }
      }
      ++j;
    }
  }
  return j;
}

const char* kTypeKeywords[] = {"class", "interface", "enum", "record"};

bool word_at(const std::string& s, size_t pos, const std::string& word) {
  if (s.compare(pos, word.size(), word) != 0) return false;
  if (pos > 0 && ident_char(s[pos - 1])) return false;
  size_t after = pos + word.size();
  return after >= s.size() || !ident_char(s[after]);
}

std::string ident_after(const std::string& s, size_t pos) {
  pos = skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && ident_char(s[pos])) ++pos;
  return s.substr(start, pos - start);
}

std::string ident_before(const std::string& s, size_t pos) {
  size_t end = pos;
  while (end > 0 && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  size_t start = end;
  while (start > 0 && ident_char(s[start - 1])) --start;
  return s.substr(start, end - start);
}

struct DeclInfo {
  enum class Kind { Type, Method, Other } kind = Kind::Other;
  std::string name;
};

// Classifies the declaration header `header` (code text with literals
// blanked, annotations removed by the caller's skipping).
DeclInfo classify_header(const std::string& header) {
  DeclInfo info;
  size_t paren = header.find('(');
  for (const char* kw : kTypeKeywords) {
    size_t pos = 0;
    std::string w = kw;
    while ((pos = header.find(w, pos)) != std::string::npos) {
      if (word_at(header, pos, w)) {
        std::string name = ident_after(header, pos + w.size());
        if (!name.empty() && (paren == std::string::npos || pos < paren)) {
          info.kind = DeclInfo::Kind::Type;
          info.name = name;
          return info;
        }
      }
      pos += w.size();
    }
  }
  if (paren != std::string::npos) {
    size_t eq = header.find('=');
    if (eq == std::string::npos || eq > paren) {
      std::string name = ident_before(header, paren);
      if (!name.empty() && !std::isdigit(static_cast<unsigned char>(name[0]))) {
        info.kind = DeclInfo::Kind::Method;
        info.name = name;
        return info;
      }
    }
  }
  return info;
}

struct MethodScope {
  std::string name;
  int first_line = 0;  // signature line
  int last_line = 0;
  size_t body_open = 0;
  size_t body_close = 0;
};

// Brace-matching pass over masked code collecting method body scopes.
std::vector<MethodScope> collect_method_scopes(const std::string& masked) {
  enum class ScopeKind { Type, Method, Other };
  struct Open {
    ScopeKind kind;
    size_t open_off;
    int open_line;
    std::string name;
    int header_line;
  };
  std::vector<MethodScope> methods;
  std::vector<Open> stack;

  int line = 1;
  size_t header_start = 0;
  int header_start_line = 1;
  int paren_depth = 0;

  auto annotation_free = [&](size_t from, size_t to) {
    std::string h;
    size_t i = from;
    while (i < to) {
      if (masked[i] == '@') {
        size_t j = skip_annotation(masked, i);
        if (j == std::string::npos) {
          h += "@interface";
          i += 10;
          continue;
        }
        i = j;
        continue;
      }
      h += masked[i];
      ++i;
    }
    return h;
  };

  for (size_t i = 0; i < masked.size(); ++i) {
    char c = masked[i];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (c == '(') ++paren_depth;
    if (c == ')') paren_depth = std::max(0, paren_depth - 1);
    if (paren_depth > 0) continue;
    if (c == ';') {
      header_start = i + 1;
      header_start_line = line;
      continue;
    }
    if (c == '{') {
      std::string header = annotation_free(header_start, i);
      DeclInfo decl = classify_header(header);
      ScopeKind kind = ScopeKind::Other;
      bool parent_is_type = stack.empty() || stack.back().kind == ScopeKind::Type;
      if (decl.kind == DeclInfo::Kind::Type) {
        kind = ScopeKind::Type;
      } else if (decl.kind == DeclInfo::Kind::Method && parent_is_type &&
                 !stack.empty()) {
        kind = ScopeKind::Method;
      }
      // First non-ws line of the header is the signature line.
      int sig_line = header_start_line;
      {
        size_t p = header_start;
        int l = header_start_line;
        while (p < i && std::isspace(static_cast<unsigned char>(masked[p]))) {
          if (masked[p] == '\n') ++l;
          ++p;
        }
        sig_line = l;
      }
      stack.push_back(Open{kind, i, line, decl.name, sig_line});
      header_start = i + 1;
      header_start_line = line;
      continue;
    }
    if (c == '}') {
      if (!stack.empty()) {
        Open open = stack.back();
        stack.pop_back();
        if (open.kind == ScopeKind::Method) {
          methods.push_back(MethodScope{open.name, open.header_line, line,
                                        open.open_off, i});
        }
      }
      header_start = i + 1;
      header_start_line = line;
      continue;
    }
  }
  return methods;
}

size_t find_package_offset(const std::string& masked) {
  size_t pos = 0;
  while ((pos = masked.find("package", pos)) != std::string::npos) {
    if (word_at(masked, pos, "package")) return pos;
    pos += 7;
  }
  return std::string::npos;
}

}  // namespace

const char* comment_level_name(CommentLevel level) {
  switch (level) {
    case CommentLevel::Class:
      return "Class";
    case CommentLevel::Method:
      return "Method";
    default:
      return "Inline";
  }
}

std::vector<RawCommentSpan> scan_comment_spans(const std::string& source) {
  return scan(source).comments;
}

std::vector<JavaCommentSpan> extract_comments(
    const std::string& java_source, const std::vector<LineRange>& changed_line_ranges,
    const std::string& file_path) {
  ScanResult scanned = scan(java_source);
  const std::string& masked = scanned.masked;
  size_t package_off = find_package_offset(masked);
  std::vector<MethodScope> methods = collect_method_scopes(masked);

  auto method_changed = [&](const MethodScope& m) {
    LineRange span{m.first_line, m.last_line};
    for (const auto& r : changed_line_ranges) {
      if (span.intersects(r)) return true;
    }
    return false;
  };

  auto owner_method = [&](const RawCommentSpan& c) -> const MethodScope* {
    const MethodScope* best = nullptr;
    for (const auto& m : methods) {
      if (m.body_open < c.begin && c.end <= m.body_close) {
        if (!best || (m.body_close - m.body_open) < (best->body_close - best->body_open)) {
          best = &m;
        }
      }
    }
    return best;
  };

  std::vector<JavaCommentSpan> out;
  for (const auto& c : scanned.comments) {
    if (package_off != std::string::npos && c.begin < package_off) continue;

    if (c.javadoc) {
      // Attachment: whitespace and annotations only may separate the
      // Javadoc from its declaration.
      size_t i = skip_ws(java_source, c.end);
      bool broken = false;
      while (i < java_source.size() && java_source[i] == '@') {
        size_t j = skip_annotation(java_source, i);
        if (j == std::string::npos) break;  // @interface: declaration itself
        i = skip_ws(java_source, j);
      }
      if (i + 1 < java_source.size() && java_source[i] == '/' &&
          (java_source[i + 1] == '/' || java_source[i + 1] == '*')) {
        broken = true;  // another comment intervenes
      }
      if (!broken && i < java_source.size()) {
        // Declaration header: up to '{', ';' or '=' outside parens.
        size_t end = i;
        int paren = 0;
        while (end < java_source.size() && end < i + 4000) {
          char ch = masked[end];
          if (ch == '(') ++paren;
          if (ch == ')') paren = std::max(0, paren - 1);
          if (paren == 0 && (ch == '{' || ch == ';' || ch == '=')) break;
          ++end;
        }
        std::string header;
        {
          size_t p = i;
          while (p < end) {
            if (masked[p] == '@') {
              size_t j = skip_annotation(masked, p);
              if (j == std::string::npos) {
                header += "@interface";
                p += 10;
                continue;
              }
              p = j;
              continue;
            }
            header += masked[p];
            ++p;
          }
        }
        bool at_interface = header.find("@interface") != std::string::npos;
        DeclInfo decl = classify_header(header);
        if (at_interface) {
          decl.kind = DeclInfo::Kind::Type;
          auto pos = header.find("@interface");
          decl.name = ident_after(header, pos + 10);
        }
        if (decl.kind == DeclInfo::Kind::Type) {
          out.push_back(JavaCommentSpan{file_path, c.begin, c.end, CommentLevel::Class,
                                        decl.name, strip_comment_text(java_source, c)});
          continue;
        }
        if (decl.kind == DeclInfo::Kind::Method) {
          out.push_back(JavaCommentSpan{file_path, c.begin, c.end, CommentLevel::Method,
                                        decl.name, strip_comment_text(java_source, c)});
          continue;
        }
      }
      // Unattached Javadoc falls through to the inline rule.
    }

    const MethodScope* owner = owner_method(c);
    if (owner == nullptr) continue;
    if (!method_changed(*owner)) continue;
    std::string text = strip_comment_text(java_source, c);
    if (text.empty()) continue;
    out.push_back(JavaCommentSpan{file_path, c.begin, c.end, CommentLevel::Inline, "",
                                  std::move(text)});
  }
  return out;
}

std::vector<Artifact> comment_artifacts(
    const Commit& commit, const std::map<std::string, std::string>& sources) {
  std::vector<Artifact> out;
  for (const auto& file : commit.changed_files) {
    if (file.language != "java") continue;
    auto it = sources.find(file.path);
    if (it == sources.end()) {
      throw Error(ErrorCode::MissingSource,
                  "no source provided for changed Java file " + file.path);
    }
    auto ranges = post_image_ranges(commit.diff, file.path);
    auto spans = extract_comments(it->second, ranges, file.path);

    auto collect = [&](CommentLevel level, ArtifactKind kind) {
      Artifact a;
      a.ref = ArtifactRef{kind, file.path, ""};
      for (const auto& s : spans) {
        if (s.level != level || s.text.empty()) continue;
        a.body_blocks.push_back(BodyBlock{"", "", s.text});
      }
      if (!a.body_blocks.empty()) out.push_back(std::move(a));
    };
    collect(CommentLevel::Class, ArtifactKind::ClassJavadoc);
    collect(CommentLevel::Method, ArtifactKind::MethodJavadoc);
    collect(CommentLevel::Inline, ArtifactKind::InlineComment);
  }
  return out;
}

}  // namespace rforge
