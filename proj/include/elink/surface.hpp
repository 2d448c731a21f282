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

#include "elink/nn.hpp"

namespace elink {

// Fixed character inventory: pad, a-z, 0-9, space, apostrophe, hyphen,
// period, and an out-of-vocabulary slot. Anything else maps to OOV.
struct char_vocab {
  static constexpr int pad_slot = 0;
  static constexpr int oov_slot = 41;
  static constexpr int slot_count = 42;

  static int slot(char c);
};

struct surface_config {
  int d_c = 16;        // per-character embedding width
  int d_w = 32;        // word vector width
  int d_s = 32;        // name (surface) vector width
  int max_chars = 16;  // characters used per word
  int max_words = 6;   // words used per name
};

// Hierarchical name encoder: character embeddings are concatenated per word,
// projected to a word vector, word vectors are mean-pooled and projected to
// one surface vector. The pad embedding (row 0) stays zero and never
// receives gradient, so short and long words line up.
struct surface_encoder {
  surface_config cfg;
  nn::param char_table;       // slot_count x d_c
  nn::dense_layer word_proj;  // d_w x (max_chars * d_c), tanh
  nn::dense_layer name_proj;  // d_s x d_w, tanh

  explicit surface_encoder(const surface_config& c = {});

  void init(rng& r);
  nn::param_list params();

  // Graph builders for the trainable path.
  nn::graph::node word_node(nn::graph& g, const std::string& word);
  nn::graph::node surface_node(nn::graph& g, const std::string& name);

  // Frozen-parameter evaluation through the same graph path.
  std::vector<double> encode_word(const std::string& word);
  std::vector<double> encode_surface(const std::string& name);
};

}  // namespace elink
