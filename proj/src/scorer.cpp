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

#include "elink/scorer.hpp"

#include "elink/error.hpp"

namespace elink {

scorer_params::scorer_params(const scorer_config& c, int d_s, int d_ctx,
                             int d_ent)
    : cfg(c),
      mention_proj("scorer.mention_proj", d_ctx, c.d_f),
      entity_proj("scorer.entity_proj", d_ent, c.d_f),
      head_hidden("scorer.head_hidden", 2 * (d_s + c.d_f), c.hidden,
                  c.linear_head ? nn::activation::identity
                                : nn::activation::relu),
      head_out("scorer.head_out", c.hidden, 1, nn::activation::sigmoid) {}

void scorer_params::init(rng& r) {
  nn::init_dense(mention_proj, r);
  nn::init_dense(entity_proj, r);
  nn::init_dense(head_hidden, r);
  nn::init_dense(head_out, r);
}

nn::param_list scorer_params::params() {
  return {&mention_proj.w, &mention_proj.b, &entity_proj.w, &entity_proj.b,
          &head_hidden.w,  &head_hidden.b,  &head_out.w,    &head_out.b};
}

nn::graph::node scorer_params::mention_embedding_node(nn::graph& g,
                                                      nn::graph::node surface,
                                                      nn::graph::node context) {
  return g.concat({surface, g.dense(mention_proj, context)});
}

nn::graph::node scorer_params::entity_embedding_node(nn::graph& g,
                                                     nn::graph::node surface,
                                                     nn::graph::node anchor) {
  return g.concat({surface, g.dense(entity_proj, anchor)});
}

nn::graph::node scorer_params::score_node(nn::graph& g, nn::graph::node m_emb,
                                          nn::graph::node e_emb) {
  return g.dense(head_out, g.dense(head_hidden, g.concat({m_emb, e_emb})));
}

std::vector<double> scorer_params::mention_embedding(
    const std::vector<double>& surface, const std::vector<double>& context) {
  nn::graph g;
  return g.value(
      mention_embedding_node(g, g.constant(surface), g.constant(context)));
}

std::vector<double> scorer_params::entity_embedding(
    const std::vector<double>& surface, const std::vector<double>& anchor) {
  nn::graph g;
  return g.value(
      entity_embedding_node(g, g.constant(surface), g.constant(anchor)));
}

double scorer_params::score_pair(const std::vector<double>& m_emb,
                                 const std::vector<double>& e_emb) {
  nn::graph g;
  return g.scalar(score_node(g, g.constant(m_emb), g.constant(e_emb)));
}

entity_anchors::entity_anchors(const knowledge_base& kb,
                               const triplet_encoder& enc) {
  for (const entity& e : kb.entries()) {
    anchors_.emplace(e.id, enc.encode_entity_desc(e).values);
  }
}

const std::vector<double>& entity_anchors::at(
    const std::string& entity_id) const {
  auto it = anchors_.find(entity_id);
  if (it == anchors_.end()) fail(errc::missing_key, "anchor " + entity_id);
  return it->second;
}

linker_model::linker_model(const surface_config& sc, int d_ctx, int d_word,
                           const scorer_config& cc, double margin)
    : surface(sc),
      entity_enc(d_word, d_word, margin),
      scorer(cc, sc.d_s, d_ctx, d_word) {}

void linker_model::init(rng& r) {
  surface.init(r);
  entity_enc.init(r);
  scorer.init(r);
}

nn::graph::node linker_model::pair_score_node(
    nn::graph& g, const std::string& mention_text,
    const std::vector<double>& context_vec, const entity& e,
    const std::vector<double>& anchor_vec) {
  nn::graph::node m_emb = scorer.mention_embedding_node(
      g, surface.surface_node(g, mention_text), g.constant(context_vec));
  nn::graph::node e_emb = scorer.entity_embedding_node(
      g, surface.surface_node(g, e.name), g.constant(anchor_vec));
  return scorer.score_node(g, m_emb, e_emb);
}

double linker_model::score(const std::string& mention_text,
                           const std::vector<double>& context_vec,
                           const entity& e,
                           const std::vector<double>& anchor_vec) {
  nn::graph g;
  return g.scalar(pair_score_node(g, mention_text, context_vec, e, anchor_vec));
}

link_decision link_mention(linker_model& model, const context_encoder& ctx,
                           const entity_anchors& anchors, const mention& m,
                           std::size_t mention_index,
                           const std::vector<candidate_pair>& cands,
                           const knowledge_base& kb,
                           std::vector<scored_candidate>* explain) {
  link_decision decision;
  decision.mention_index = mention_index;

  const context_vector context = ctx.encode_context(m.context);
  bool have_best = false;
  double best_score = 0.0;
  std::string best_id;

  for (const candidate_pair& c : cands) {
    const entity& e = kb.at(c.entity_id);
    double s = model.score(m.text, context.values, e, anchors.at(c.entity_id));
    if (explain) explain->push_back({c, s});
    if (!model.scorer.decide(s)) continue;
    if (!have_best || s > best_score ||
        (s == best_score && c.entity_id < best_id)) {
      have_best = true;
      best_score = s;
      best_id = c.entity_id;
    }
  }

  if (have_best) {
    decision.entity_id = best_id;
    decision.score = best_score;
    decision.linked = true;
  }
  return decision;
}

}  // namespace elink
