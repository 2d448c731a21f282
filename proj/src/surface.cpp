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

#include "elink/surface.hpp"

#include <algorithm>
#include <cmath>

#include "elink/core.hpp"
#include "elink/error.hpp"

namespace elink {

int char_vocab::slot(char c) {
  if (c >= 'a' && c <= 'z') return 1 + (c - 'a');
  if (c >= '0' && c <= '9') return 27 + (c - '0');
  switch (c) {
    case ' ': return 37;
    case '\'': return 38;
    case '-': return 39;
    case '.': return 40;
    default: return oov_slot;
  }
}

surface_encoder::surface_encoder(const surface_config& c)
    : cfg(c),
      char_table("surface.char_table", char_vocab::slot_count, c.d_c),
      word_proj("surface.word_proj", c.max_chars * c.d_c, c.d_w,
                nn::activation::tanh),
      name_proj("surface.name_proj", c.d_w, c.d_s, nn::activation::tanh) {}

void surface_encoder::init(rng& r) {
  double radius =
      std::sqrt(6.0 / (char_vocab::slot_count + cfg.d_c));
  nn::init_uniform(char_table, r, radius);
  // Pad row pinned to zero; embedding_rows also excludes it from gradients.
  for (int c = 0; c < cfg.d_c; ++c) char_table.value.at(char_vocab::pad_slot, c) = 0.0;
  nn::init_dense(word_proj, r);
  nn::init_dense(name_proj, r);
}

nn::param_list surface_encoder::params() {
  return {&char_table, &word_proj.w, &word_proj.b, &name_proj.w, &name_proj.b};
}

nn::graph::node surface_encoder::word_node(nn::graph& g,
                                           const std::string& word) {
  if (word.empty()) fail(errc::empty_word, "surface word");
  std::vector<int> slots(static_cast<std::size_t>(cfg.max_chars),
                         char_vocab::pad_slot);
  const std::size_t used =
      std::min<std::size_t>(word.size(), static_cast<std::size_t>(cfg.max_chars));
  for (std::size_t i = 0; i < used; ++i) slots[i] = char_vocab::slot(word[i]);
  nn::graph::node chars =
      g.embedding_rows(char_table, std::move(slots), char_vocab::pad_slot);
  return g.dense(word_proj, chars);
}

nn::graph::node surface_encoder::surface_node(nn::graph& g,
                                              const std::string& name) {
  std::vector<std::string> words = tokenize(name);
  if (words.empty()) fail(errc::empty_name, "surface name");
  if (static_cast<int>(words.size()) > cfg.max_words) {
    words.resize(static_cast<std::size_t>(cfg.max_words));
  }
  std::vector<nn::graph::node> per_word;
  per_word.reserve(words.size());
  for (const std::string& w : words) per_word.push_back(word_node(g, w));
  return g.dense(name_proj, g.mean(per_word));
}

std::vector<double> surface_encoder::encode_word(const std::string& word) {
  nn::graph g;
  return g.value(word_node(g, word));
}

std::vector<double> surface_encoder::encode_surface(const std::string& name) {
  nn::graph g;
  return g.value(surface_node(g, name));
}

}  // namespace elink
