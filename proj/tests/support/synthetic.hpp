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

#include <cstdint>
#include <string>
#include <vector>

#include "elink/core.hpp"
#include "elink/embedding.hpp"
#include "elink/trainer.hpp"

namespace elink::testsupport {

// Entities with pairwise-disjoint topic vocabularies, one topic per entity;
// descriptions are draws from the entity's own vocabulary. Used for triplet
// training checks.
struct topic_corpus {
  knowledge_base kb;
  word_vectors wv;
  std::vector<std::vector<std::string>> vocab_per_entity;
};

topic_corpus make_topic_corpus(int n_entities, int tokens_per_topic,
                               int vec_dim, std::uint64_t seed);

// A linking corpus: 50 entities over 10 topics, two of them identically
// named with different-topic descriptions ("david davis", politics vs
// farming). 100 mentions, one labeled pair each: 50 positives pair a
// name-variant mention (topical context) with its entity; 50 negatives pair
// the exact entity name with a context drawn from a different topic.
struct linking_corpus {
  knowledge_base kb;
  std::vector<mention> mentions;
  word_vectors wv;
  std::vector<labeled_pair> pairs;
  std::string twin_politics_id;
  std::string twin_farm_id;
  int politics_topic = 0;
  int farm_topic = 1;
};

linking_corpus make_linking_corpus(std::uint64_t seed);

// A fresh same-name mention with a politics context, not among the corpus
// mentions; blocking ties both twins at fuzzy 1.0.
mention make_twin_probe(const linking_corpus& corpus, std::uint64_t seed);

// Random name-like strings for property tests: 1-2 words over a-z.
std::string random_name(rng& r, int min_len = 3, int max_len = 12,
                        int max_words = 2);

}  // namespace elink::testsupport
