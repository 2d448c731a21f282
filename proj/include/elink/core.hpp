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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace elink {

// A knowledge-base record. All surface strings are stored normalized.
struct entity {
  std::string id;
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
};

// A pre-identified surface string plus the text around it. gold_id is only
// meaningful for training and evaluation inputs.
struct mention {
  std::string doc_id;
  std::string text;
  std::string context;
  std::optional<std::string> gold_id;
};

// A (mention, entity) pair that survived blocking, with the fuzzy average
// that admitted it.
struct candidate_pair {
  std::size_t mention_index = 0;
  std::string entity_id;
  double fuzzy_score = 0.0;
};

// Scored verdict for one mention. entity_id is empty when no candidate
// passed the decision threshold; score is meaningful only when an entity is
// proposed. linked implies score > the decision threshold.
struct link_decision {
  std::size_t mention_index = 0;
  std::optional<std::string> entity_id;
  double score = 0.0;
  bool linked = false;
};

// Entity store with deterministic (insertion) iteration order and unique ids.
class knowledge_base {
 public:
  // Throws errc::duplicate_id / errc::empty_name.
  void add(entity e);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<entity>& entries() const { return entries_; }

  const entity* find(const std::string& id) const;
  const entity& at(const std::string& id) const;

 private:
  std::vector<entity> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Lowercases ASCII letters, collapses runs of ASCII whitespace to one space
// and strips the ends. Bytes outside ASCII pass through unchanged, so
// pre-composed UTF-8 is preserved as-is. Idempotent.
std::string normalize(std::string_view text);

// Splits an already-normalized string on single spaces.
std::vector<std::string> tokenize(std::string_view normalized);

// Loaders consume JSONL, one object per line:
//   entity:  {"id","name","aliases":[..],"description"}
//   mention: {"doc_id","text","context","gold_id"?}
// aliases/description/doc_id/context may be omitted. The whole load fails on
// the first bad record; messages carry 1-based line numbers.
knowledge_base load_entities(std::istream& in);
knowledge_base load_entities_file(const std::string& path);
std::vector<mention> load_mentions(std::istream& in);
std::vector<mention> load_mentions_file(const std::string& path);

void write_entities(const knowledge_base& kb, std::ostream& out);
void write_mentions(const std::vector<mention>& mentions, std::ostream& out);

// Checks that every present gold_id resolves in the knowledge base.
void validate_gold_ids(const std::vector<mention>& mentions,
                       const knowledge_base& kb);

}  // namespace elink
