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

#include <json.hpp>

#include "elink/scorer.hpp"
#include "elink/surface.hpp"
#include "elink/trainer.hpp"

namespace elink {

// Every tunable in one place. The effective configuration is echoed into
// every output artifact so a result can always be tied to its settings.
struct pipeline_config {
  double blocking_threshold = 0.5;
  double weak_threshold_high = 0.9;
  double weak_threshold_low = 0.8;
  std::string weak_tier = "high";  // which tier cmd_train builds

  surface_config surface;
  scorer_config scorer;

  int triplet_k = 5;
  int triplet_epochs = 100;
  double triplet_lr = 0.01;

  train_config train;
  std::uint64_t seed = 42;

  struct path_set {
    std::string entities;
    std::string mentions;
    std::string vectors;
    std::string checkpoint;
    std::string context_vectors;  // optional precomputed context source
    std::string output;           // candidates / decisions; stdout if empty
    std::string pairs;            // labeled pairs for eval
    std::string metrics;          // optional metrics document
    std::string pairs_export;     // optional weak-dataset audit dump
  } paths;

  double weak_threshold() const {
    return weak_tier == "low" ? weak_threshold_low : weak_threshold_high;
  }
};

nlohmann::json config_to_json(const pipeline_config& cfg);

// Missing keys keep their defaults; unknown keys are rejected
// (errc::bad_config) so typos cannot silently change a run.
pipeline_config config_from_json(const nlohmann::json& j);

pipeline_config load_config_file(const std::string& path);
void write_config_file(const pipeline_config& cfg, const std::string& path);

}  // namespace elink
