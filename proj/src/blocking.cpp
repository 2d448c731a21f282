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

#include "elink/blocking.hpp"

#include <algorithm>
#include <thread>

#include "elink/string_similarity.hpp"

namespace elink {

double best_fuzzy(const std::string& mention_text, const entity& e) {
  double best = fuzzy_match(mention_text, e.name).average;
  for (const std::string& alias : e.aliases) {
    best = std::max(best, fuzzy_match(mention_text, alias).average);
  }
  return best;
}

std::vector<candidate_pair> candidates(const mention& m,
                                       std::size_t mention_index,
                                       const knowledge_base& kb,
                                       const blocking_config& cfg) {
  std::vector<candidate_pair> kept;
  for (const entity& e : kb.entries()) {
    double score = best_fuzzy(m.text, e);
    if (score >= cfg.threshold) {
      kept.push_back({mention_index, e.id, score});
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const candidate_pair& a, const candidate_pair& b) {
              if (a.fuzzy_score != b.fuzzy_score) {
                return a.fuzzy_score > b.fuzzy_score;
              }
              return a.entity_id < b.entity_id;
            });
  return kept;
}

std::vector<std::vector<candidate_pair>> candidates_batch(
    const std::vector<mention>& mentions, const knowledge_base& kb,
    const blocking_config& cfg, unsigned threads) {
  std::vector<std::vector<candidate_pair>> out(mentions.size());
  if (mentions.empty()) return out;

  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, mentions.size());

  if (threads == 1) {
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      out[i] = candidates(mentions[i], i, kb, cfg);
    }
    return out;
  }

  // Each worker owns a strided slice of mention indices; slots in `out` are
  // disjoint, so the merge is just the writes themselves.
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < mentions.size(); i += threads) {
        out[i] = candidates(mentions[i], i, kb, cfg);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace elink
