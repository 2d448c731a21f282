// Copyright 2026 The elink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "elink/core.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "elink/error.hpp"

namespace elink {

namespace {

using nlohmann::json;

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

json parse_line(const std::string& line, std::size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    fail(errc::malformed_record,
         "line " + std::to_string(line_no) + ": not a JSON object");
  }
  return j;
}

std::string require_string(const json& j, const char* key,
                           std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    fail(errc::malformed_record, "line " + std::to_string(line_no) +
                                     ": missing string field \"" + key + "\"");
  }
  return it->get<std::string>();
}

std::string optional_string(const json& j, const char* key,
                            std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) {
    fail(errc::malformed_record, "line " + std::to_string(line_no) +
                                     ": field \"" + key + "\" must be a string");
  }
  return it->get<std::string>();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  return in;
}

}  // namespace

void knowledge_base::add(entity e) {
  if (e.id.empty()) fail(errc::malformed_record, "entity with empty id");
  if (e.name.empty()) fail(errc::empty_name, "entity " + e.id);
  if (index_.count(e.id)) fail(errc::duplicate_id, e.id);
  index_.emplace(e.id, entries_.size());
  entries_.push_back(std::move(e));
}

const entity* knowledge_base::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const entity& knowledge_base::at(const std::string& id) const {
  const entity* e = find(id);
  if (!e) fail(errc::missing_key, "unknown entity id " + id);
  return *e;
}

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (is_ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view normalized) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < normalized.size()) {
    std::size_t end = normalized.find(' ', start);
    if (end == std::string_view::npos) end = normalized.size();
    if (end > start) tokens.emplace_back(normalized.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

knowledge_base load_entities(std::istream& in) {
  knowledge_base kb;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize(line).empty()) continue;
    json j = parse_line(line, line_no);

    entity e;
    e.id = require_string(j, "id", line_no);
    e.name = normalize(require_string(j, "name", line_no));
    if (e.name.empty()) {
      fail(errc::empty_name,
           "line " + std::to_string(line_no) + ": entity " + e.id);
    }
    e.description = normalize(optional_string(j, "description", line_no));

    auto aliases = j.find("aliases");
    if (aliases != j.end() && !aliases->is_null()) {
      if (!aliases->is_array()) {
        fail(errc::malformed_record,
             "line " + std::to_string(line_no) + ": aliases must be an array");
      }
      std::unordered_set<std::string> seen;
      for (const auto& a : *aliases) {
        if (!a.is_string()) {
          fail(errc::malformed_record, "line " + std::to_string(line_no) +
                                           ": alias must be a string");
        }
        std::string alias = normalize(a.get<std::string>());
        // Empty and repeated aliases carry no matching signal; drop them.
        if (alias.empty() || !seen.insert(alias).second) continue;
        e.aliases.push_back(std::move(alias));
      }
    }

    kb.add(std::move(e));
  }
  return kb;
}

knowledge_base load_entities_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_entities(in);
}

std::vector<mention> load_mentions(std::istream& in) {
  std::vector<mention> mentions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize(line).empty()) continue;
    json j = parse_line(line, line_no);

    mention m;
    m.doc_id = optional_string(j, "doc_id", line_no);
    m.text = normalize(require_string(j, "text", line_no));
    if (m.text.empty()) {
      fail(errc::empty_mention_text, "line " + std::to_string(line_no));
    }
    m.context = normalize(optional_string(j, "context", line_no));
    auto gold = j.find("gold_id");
    if (gold != j.end() && !gold->is_null()) {
      if (!gold->is_string()) {
        fail(errc::malformed_record, "line " + std::to_string(line_no) +
                                         ": gold_id must be a string");
      }
      m.gold_id = gold->get<std::string>();
    }
    mentions.push_back(std::move(m));
  }
  return mentions;
}

std::vector<mention> load_mentions_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_mentions(in);
}

void write_entities(const knowledge_base& kb, std::ostream& out) {
  for (const entity& e : kb.entries()) {
    json j;
    j["id"] = e.id;
    j["name"] = e.name;
    j["aliases"] = e.aliases;
    j["description"] = e.description;
    out << j.dump() << '\n';
  }
}

void write_mentions(const std::vector<mention>& mentions, std::ostream& out) {
  for (const mention& m : mentions) {
    json j;
    j["doc_id"] = m.doc_id;
    j["text"] = m.text;
    j["context"] = m.context;
    if (m.gold_id) j["gold_id"] = *m.gold_id;
    out << j.dump() << '\n';
  }
}

void validate_gold_ids(const std::vector<mention>& mentions,
                       const knowledge_base& kb) {
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    if (mentions[i].gold_id && !kb.find(*mentions[i].gold_id)) {
      fail(errc::missing_key, "mention " + std::to_string(i) +
                                  ": gold_id " + *mentions[i].gold_id +
                                  " not in knowledge base");
    }
  }
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_id: return "DuplicateId";
    case errc::malformed_record: return "MalformedRecord";
    case errc::empty_name: return "EmptyName";
    case errc::empty_mention_text: return "EmptyMentionText";
    case errc::empty_word: return "EmptyWord";
    case errc::bad_header: return "BadHeader";
    case errc::dim_mismatch: return "DimMismatch";
    case errc::duplicate_token: return "DuplicateToken";
    case errc::non_finite_value: return "NonFiniteValue";
    case errc::both_empty: return "BothEmpty";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::graph_not_recorded: return "GraphNotRecorded";
    case errc::non_finite_update: return "NonFiniteUpdate";
    case errc::no_eligible_entities: return "NoEligibleEntities";
    case errc::no_positives: return "NoPositives";
    case errc::single_class_dataset: return "SingleClassDataset";
    case errc::too_small: return "TooSmall";
    case errc::empty_input: return "EmptyInput";
    case errc::single_class: return "SingleClass";
    case errc::missing_key: return "MissingKey";
    case errc::io_error: return "IoError";
    case errc::bad_version: return "BadVersion";
    case errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace elink
