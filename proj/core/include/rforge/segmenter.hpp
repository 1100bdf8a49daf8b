#pragma once

#include <set>
#include <string>
#include <vector>

#include "rforge/model.hpp"

namespace rforge {

struct SegmenterConfig {
  /// Tokens that never end a sentence. Entries must end with a period;
  /// matching is case-insensitive.
  std::set<std::string> abbreviations = default_abbreviations();
  int min_sentence_chars = 2;
  /// When true, Markdown list items and headings are their own sentences
  /// even without terminal punctuation.
  bool treat_newline_as_boundary = true;

  static std::set<std::string> default_abbreviations();
};

/// Splits one text into sentences. Deterministic; the concatenation of
/// the result equals the input once whitespace is ignored.
std::vector<std::string> segment_text(const std::string& text,
                                      const SegmenterConfig& cfg = {});

/// Segments every body block of the artifact, assigning ordinals 0..n-1
/// across the whole artifact. Block boundaries are sentence boundaries.
std::vector<Sentence> segment(const Artifact& artifact,
                              const SegmenterConfig& cfg = {});

}  // namespace rforge
