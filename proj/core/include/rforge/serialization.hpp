#pragma once

#include <string>

#include <json.hpp>

#include "rforge/model.hpp"

namespace rforge {

using json = nlohmann::json;

// JSON is the canonical structured-text record format for all core types.
// nlohmann::json keeps object keys sorted, so dumps are byte-stable; every
// file this project writes goes through canonical_dump.

json to_json(const ComponentSet& s);
ComponentSet component_set_from_json(const json& j);

json to_json(const ChangedFile& f);
ChangedFile changed_file_from_json(const json& j);

json to_json(const Commit& c);
Commit commit_from_json(const json& j);

json to_json(const ArtifactRef& r);
ArtifactRef artifact_ref_from_json(const json& j);

json to_json(const BodyBlock& b);
BodyBlock body_block_from_json(const json& j);

json to_json(const Artifact& a);
Artifact artifact_from_json(const json& j);

json to_json(const Sentence& s);
Sentence sentence_from_json(const json& j);

json to_json(const LabeledSentence& s);
LabeledSentence labeled_sentence_from_json(const json& j);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rforge
