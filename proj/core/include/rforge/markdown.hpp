#pragma once

#include <string>

namespace rforge {

/// Prepares platform comment bodies for sentence segmentation:
///   - fenced code blocks (``` / ~~~) are removed, fences included
///   - blockquote runs that quote diff hunks are removed
///   - inline `code` spans keep their literal text, backticks stripped
///   - CRLF is normalized to LF
/// A blockquote run counts as a diff quote when any of its lines, after
/// the '>' prefix, starts with "@@", "+++", "---" or "diff --git".
std::string clean_markdown(const std::string& text);

}  // namespace rforge
