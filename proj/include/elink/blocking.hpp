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

#include <vector>

#include "elink/core.hpp"

namespace elink {

struct blocking_config {
  // Keep entities whose best fuzzy average is at least this (inclusive).
  double threshold = 0.5;
};

// Best fuzzy average of the mention text against the entity's canonical name
// and every alias.
double best_fuzzy(const std::string& mention_text, const entity& e);

// Entities whose best fuzzy average meets cfg.threshold, sorted by
// (score descending, entity_id ascending). May be empty.
std::vector<candidate_pair> candidates(const mention& m,
                                       std::size_t mention_index,
                                       const knowledge_base& kb,
                                       const blocking_config& cfg);

// Per-mention candidate lists, element i identical to candidates(ms[i], ...).
// Mentions are scanned by a small thread pool; output does not depend on the
// thread count. threads == 0 picks the hardware count.
std::vector<std::vector<candidate_pair>> candidates_batch(
    const std::vector<mention>& mentions, const knowledge_base& kb,
    const blocking_config& cfg, unsigned threads = 0);

}  // namespace elink
