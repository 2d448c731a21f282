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
#include <utility>
#include <vector>

#include "elink/blocking.hpp"
#include "elink/core.hpp"
#include "elink/scorer.hpp"

namespace elink {

enum class pair_tier { high_confidence, low_confidence, synthetic };

const char* pair_tier_name(pair_tier t);
pair_tier pair_tier_from_name(const std::string& name);

struct labeled_pair {
  std::size_t mention_index = 0;
  std::string entity_id;
  int label = 0;  // 0 or 1
  pair_tier tier = pair_tier::synthetic;
};

struct train_config {
  int epochs = 200;
  double lr = 0.05;
  int batch_size = 8;
  std::uint64_t seed = 42;
  int negative_ratio = 2;  // negatives sampled per positive
  double margin = 0.2;
};

// Weak supervision: a mention contributes one positive when a single entity
// is the strict fuzzy maximum and that maximum is at least tier_threshold.
// Per positive, neg_ratio negatives are sampled (seeded, without
// replacement) from the mention's blocking candidates minus the positive.
// Throws errc::no_positives when nothing qualifies.
std::vector<labeled_pair> build_weak_dataset(const std::vector<mention>& ms,
                                             const knowledge_base& kb,
                                             double tier_threshold,
                                             int neg_ratio,
                                             const blocking_config& blocking,
                                             rng& r);

struct epoch_stats {
  double mean_loss = 0.0;
  double accuracy = 0.0;
};

struct train_result {
  std::vector<epoch_stats> epochs;
};

// Joint SGD on binary cross-entropy over pair scores. Updates the scorer and
// the surface encoder; the triplet encoder and the context encoder stay
// frozen. Throws errc::single_class_dataset unless both labels appear.
train_result train_linker(const std::vector<labeled_pair>& dataset,
                          const std::vector<mention>& ms,
                          const knowledge_base& kb, const context_encoder& ctx,
                          linker_model& model, const train_config& cfg);

// Disjoint, exhaustive, label-stratified split; test gets round(n * fraction)
// of each class. Throws errc::too_small when either side would be empty.
std::pair<std::vector<labeled_pair>, std::vector<labeled_pair>>
train_test_split(const std::vector<labeled_pair>& dataset,
                 double test_fraction, rng& r);

}  // namespace elink
