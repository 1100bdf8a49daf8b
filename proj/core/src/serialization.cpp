#include "rforge/serialization.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rforge/errors.hpp"

namespace rforge {

namespace {

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::SchemaViolation,
                std::string("expected string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(ErrorCode::SchemaViolation,
                std::string("expected integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

json to_json(const ComponentSet& s) {
  json arr = json::array();
  for (auto c : s.items()) arr.push_back(component_name(c));
  return arr;
}

ComponentSet component_set_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::SchemaViolation, "labels must be an array");
  }
  ComponentSet out;
  for (const auto& e : j) {
    auto c = parse_component(e.get<std::string>());
    if (!c) {
      throw Error(ErrorCode::SchemaViolation,
                  "unknown rationale component '" + e.get<std::string>() + "'");
    }
    out.insert(*c);
  }
  return out;
}

json to_json(const ChangedFile& f) {
  return json{{"path", f.path},
              {"language", f.language},
              {"added", f.added},
              {"removed", f.removed}};
}

ChangedFile changed_file_from_json(const json& j) {
  ChangedFile f;
  f.path = require_string(j, "path");
  f.language = require_string(j, "language");
  f.added = require_int(j, "added");
  f.removed = require_int(j, "removed");
  return f;
}

json to_json(const Commit& c) {
  json files = json::array();
  for (const auto& f : c.changed_files) files.push_back(to_json(f));
  return json{{"repo", c.repo_slug},
              {"sha", c.sha},
              {"message", c.message},
              {"diff", c.diff},
              {"changed_files", files}};
}

Commit commit_from_json(const json& j) {
  Commit c;
  c.repo_slug = require_string(j, "repo");
  c.sha = require_string(j, "sha");
  c.message = require_string(j, "message");
  c.diff = require_string(j, "diff");
  if (!j.contains("changed_files") || !j["changed_files"].is_array()) {
    throw Error(ErrorCode::SchemaViolation, "expected array field 'changed_files'");
  }
  for (const auto& e : j["changed_files"]) {
    c.changed_files.push_back(changed_file_from_json(e));
  }
  return c;
}

json to_json(const ArtifactRef& r) {
  return json{{"kind", kind_name(r.kind)}, {"locator", r.locator}, {"url", r.url}};
}

ArtifactRef artifact_ref_from_json(const json& j) {
  ArtifactRef r;
  auto k = parse_kind(require_string(j, "kind"));
  if (!k) {
    throw Error(ErrorCode::SchemaViolation,
                "unknown artifact kind '" + j["kind"].get<std::string>() + "'");
  }
  r.kind = *k;
  r.locator = require_string(j, "locator");
  r.url = require_string(j, "url");
  return r;
}

json to_json(const BodyBlock& b) {
  return json{{"author", b.author}, {"timestamp", b.timestamp}, {"text", b.text}};
}

BodyBlock body_block_from_json(const json& j) {
  BodyBlock b;
  b.author = require_string(j, "author");
  b.timestamp = require_string(j, "timestamp");
  b.text = require_string(j, "text");
  return b;
}

json to_json(const Artifact& a) {
  json blocks = json::array();
  for (const auto& b : a.body_blocks) blocks.push_back(to_json(b));
  return json{{"ref", to_json(a.ref)},
              {"title", a.title},
              {"body_blocks", blocks},
              {"relevance", relevance_name(a.relevance)}};
}

Artifact artifact_from_json(const json& j) {
  Artifact a;
  a.ref = artifact_ref_from_json(j.at("ref"));
  a.title = require_string(j, "title");
  if (!j.contains("body_blocks") || !j["body_blocks"].is_array()) {
    throw Error(ErrorCode::SchemaViolation, "expected array field 'body_blocks'");
  }
  for (const auto& b : j["body_blocks"]) a.body_blocks.push_back(body_block_from_json(b));
  auto rel = parse_relevance(require_string(j, "relevance"));
  if (!rel) {
    throw Error(ErrorCode::SchemaViolation,
                "unknown relevance '" + j["relevance"].get<std::string>() + "'");
  }
  a.relevance = *rel;
  return a;
}

json to_json(const Sentence& s) {
  return json{{"artifact", to_json(s.artifact)}, {"ordinal", s.ordinal}, {"text", s.text}};
}

Sentence sentence_from_json(const json& j) {
  Sentence s;
  s.artifact = artifact_ref_from_json(j.at("artifact"));
  s.ordinal = require_int(j, "ordinal");
  s.text = require_string(j, "text");
  return s;
}

json to_json(const LabeledSentence& s) {
  return json{{"sentence", to_json(s.sentence)}, {"labels", to_json(s.labels)}};
}

LabeledSentence labeled_sentence_from_json(const json& j) {
  LabeledSentence s;
  s.sentence = sentence_from_json(j.at("sentence"));
  s.labels = component_set_from_json(j.at("labels"));
  return s;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << content;
}

}  // namespace rforge
