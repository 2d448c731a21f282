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

#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "elink/core.hpp"
#include "elink/embedding.hpp"
#include "elink/nn.hpp"

namespace elink {

struct context_vector {
  std::vector<double> values;
  // False when the text was empty or nothing was in vocabulary; the vector
  // is all zeros in that case.
  bool has_context = false;
};

// Turns mention context text into a fixed-width vector. Implementations are
// deterministic and frozen; training never updates them.
class context_encoder {
 public:
  virtual ~context_encoder() = default;
  virtual int dim() const = 0;
  virtual context_vector encode_context(const std::string& text) const = 0;
};

// Mean of the word vectors of the in-vocabulary whitespace tokens.
class bag_of_embeddings final : public context_encoder {
 public:
  explicit bag_of_embeddings(const word_vectors& wv) : wv_(&wv) {}
  int dim() const override { return wv_->dim(); }
  context_vector encode_context(const std::string& text) const override;

 private:
  const word_vectors* wv_;
};

// Vectors produced offline by an external model, keyed by the exact
// normalized input text. A lookup miss is an error, never a silent zero.
// File format: a header line with the dimension, then "key<TAB>v1 ... v_d"
// lines.
class precomputed_vectors final : public context_encoder {
 public:
  explicit precomputed_vectors(int dim) : dim_(dim) {}

  static precomputed_vectors load(std::istream& in);
  static precomputed_vectors load_file(const std::string& path);

  int dim() const override { return dim_; }
  context_vector encode_context(const std::string& text) const override;

  void insert(const std::string& key, std::vector<double> values);
  std::size_t size() const { return table_.size(); }

 private:
  int dim_ = 0;
  std::unordered_map<std::string, std::vector<double>> table_;
};

// One training example for the entity encoder: a word the description is
// about and a word it has nothing to do with.
struct triplet_example {
  std::string entity_id;
  std::string positive_word;
  std::string negative_word;
};

// Entity-description encoder trained so the anchor vector sits nearer the
// word vectors of representative description tokens than unrelated ones.
// Word vectors are bound separately so a checkpoint can be reconstructed
// before its vector file is opened.
struct triplet_encoder {
  nn::dense_layer desc_proj;  // d_ent x d_emb, identity
  double margin = 0.2;
  const word_vectors* wv = nullptr;

  triplet_encoder(int d_emb, int d_ent, double m = 0.2)
      : desc_proj("triplet.desc_proj", d_emb, d_ent, nn::activation::identity),
        margin(m) {}

  // Throws errc::dim_mismatch when the vector width is not d_emb.
  void bind(const word_vectors& vectors);

  void init(rng& r) { nn::init_dense(desc_proj, r); }
  nn::param_list params() { return {&desc_proj.w, &desc_proj.b}; }

  int entity_dim() const { return desc_proj.out(); }

  struct entity_vector {
    std::vector<double> values;
    // False when the description is empty or entirely out of vocabulary;
    // the vector is all zeros in that case.
    bool has_description = false;
  };

  // Mean-pooled description tokens through desc_proj.
  entity_vector encode_entity_desc(const entity& e) const;

  // Trainable path; pre: the entity has an in-vocabulary description.
  nn::graph::node anchor_node(nn::graph& g, const entity& e);
};

// Per entity, up to k triplets. Positives are the top-k description tokens
// by tf-idf (tf within the description, idf over all descriptions) that are
// in vocabulary; each negative is drawn uniformly (seeded) from the
// in-vocabulary tokens of other entities' descriptions, redrawn while it
// appears in this description (at most 100 redraws, then the triplet is
// skipped). Throws errc::no_eligible_entities when nothing is produced.
std::vector<triplet_example> build_triplets(const knowledge_base& kb,
                                            const word_vectors& wv, rng& r,
                                            int k);

struct triplet_train_result {
  std::vector<double> epoch_mean_loss;
};

// SGD on the triplet hinge over cosine distance. Updates desc_proj only.
triplet_train_result train_triplet(triplet_encoder& enc,
                                   const std::vector<triplet_example>& triplets,
                                   const knowledge_base& kb, int epochs,
                                   double lr, rng& r);

}  // namespace elink
