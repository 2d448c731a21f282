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

#include <string>

#include "elink/config.hpp"
#include "elink/scorer.hpp"

namespace elink {

inline constexpr int kCheckpointVersion = 1;

// One versioned JSON document holding every parameter tensor (row-major,
// shortest round-trip decimals) plus the effective config and seed. Written
// to a temp file and renamed, so a partial checkpoint never lands. Two runs
// with the same inputs and seed produce byte-identical files.
void save_checkpoint(const std::string& path, linker_model& model,
                     const pipeline_config& cfg);

struct loaded_checkpoint {
  pipeline_config config;
  linker_model model;
};

// Rejects unknown versions (errc::bad_version) and shape drift
// (errc::shape_mismatch). The model's word vectors must be bound afterwards.
loaded_checkpoint load_checkpoint(const std::string& path);

}  // namespace elink
