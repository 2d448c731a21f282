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
#include <unordered_map>
#include <vector>

#include "elink/core.hpp"
#include "elink/semantic.hpp"
#include "elink/surface.hpp"

namespace elink {

struct scorer_config {
  int d_f = 32;         // width both semantic sides are projected to
  int hidden = 64;      // comparison head hidden width
  bool linear_head = false;  // identity instead of relu between head layers
  double decision_threshold = 0.5;
};

// Compatibility projections for the two semantic vectors plus the two-layer
// comparison head with terminal sigmoid.
struct scorer_params {
  scorer_config cfg;
  nn::dense_layer mention_proj;  // d_f x d_ctx, identity
  nn::dense_layer entity_proj;   // d_f x d_ent, identity
  nn::dense_layer head_hidden;   // hidden x 2*(d_s + d_f)
  nn::dense_layer head_out;      // 1 x hidden, sigmoid

  scorer_params(const scorer_config& c, int d_s, int d_ctx, int d_ent);

  void init(rng& r);
  nn::param_list params();

  // concat(surface, proj(semantic)); length d_s + d_f.
  nn::graph::node mention_embedding_node(nn::graph& g, nn::graph::node surface,
                                         nn::graph::node context);
  nn::graph::node entity_embedding_node(nn::graph& g, nn::graph::node surface,
                                        nn::graph::node anchor);
  // sigmoid(head(concat(m_emb, e_emb))), in (0, 1).
  nn::graph::node score_node(nn::graph& g, nn::graph::node m_emb,
                             nn::graph::node e_emb);

  std::vector<double> mention_embedding(const std::vector<double>& surface,
                                        const std::vector<double>& context);
  std::vector<double> entity_embedding(const std::vector<double>& surface,
                                       const std::vector<double>& anchor);
  double score_pair(const std::vector<double>& m_emb,
                    const std::vector<double>& e_emb);

  // Strictly greater than the threshold.
  bool decide(double score) const { return score > cfg.decision_threshold; }
};

// Frozen anchors for every entity, computed once per knowledge base.
class entity_anchors {
 public:
  entity_anchors() = default;
  entity_anchors(const knowledge_base& kb, const triplet_encoder& enc);
  const std::vector<double>& at(const std::string& entity_id) const;

 private:
  std::unordered_map<std::string, std::vector<double>> anchors_;
};

// Everything trained in the pipeline, bundled. The context encoder stays
// outside: it is frozen input, possibly precomputed offline.
struct linker_model {
  surface_encoder surface;
  triplet_encoder entity_enc;
  scorer_params scorer;

  // d_word is the word-vector width; anchors live in that space, so the
  // entity encoder maps d_word -> d_word. d_ctx is the context-vector width
  // (equal to d_word for bag-of-embeddings, file-declared for precomputed).
  linker_model(const surface_config& sc, int d_ctx, int d_word,
               const scorer_config& cc, double margin = 0.2);

  void init(rng& r);
  void bind_vectors(const word_vectors& wv) { entity_enc.bind(wv); }

  // Score node for one (mention, entity) pair; the trainable path used for
  // both inference and training so the two can never drift apart.
  nn::graph::node pair_score_node(nn::graph& g, const std::string& mention_text,
                                  const std::vector<double>& context_vec,
                                  const entity& e,
                                  const std::vector<double>& anchor_vec);

  double score(const std::string& mention_text,
               const std::vector<double>& context_vec, const entity& e,
               const std::vector<double>& anchor_vec);
};

// One candidate's scored outcome, for explain-style output.
struct scored_candidate {
  candidate_pair candidate;
  double score = 0.0;
};

// Scores every candidate and keeps the best passing one; ties break toward
// the smaller entity id. Empty candidates give an unlinked decision. When
// explain is non-null it receives every candidate with its score, in
// candidate order.
link_decision link_mention(linker_model& model, const context_encoder& ctx,
                           const entity_anchors& anchors, const mention& m,
                           std::size_t mention_index,
                           const std::vector<candidate_pair>& cands,
                           const knowledge_base& kb,
                           std::vector<scored_candidate>* explain = nullptr);

}  // namespace elink
