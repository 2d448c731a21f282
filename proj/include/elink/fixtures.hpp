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
#include <vector>

#include "elink/core.hpp"
#include "elink/embedding.hpp"

namespace elink {

// The built-in demo corpus: ten entities over five topics, including a pair
// of identically named entities with different descriptions, mentions with
// topical contexts, and seeded word vectors covering the topic vocabulary.
struct demo_corpus {
  knowledge_base kb;
  std::vector<mention> mentions;
  word_vectors vectors;

  // The identically named pair, for disambiguation demos.
  std::string politician_id;
  std::string farmer_id;
};

demo_corpus make_demo_corpus();

}  // namespace elink
