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

#include "elink/trainer.hpp"

#include <algorithm>
#include <cmath>

#include "elink/error.hpp"

namespace elink {

const char* pair_tier_name(pair_tier t) {
  switch (t) {
    case pair_tier::high_confidence: return "high_confidence";
    case pair_tier::low_confidence: return "low_confidence";
    case pair_tier::synthetic: return "synthetic";
  }
  return "synthetic";
}

pair_tier pair_tier_from_name(const std::string& name) {
  if (name == "high_confidence") return pair_tier::high_confidence;
  if (name == "low_confidence") return pair_tier::low_confidence;
  if (name == "synthetic") return pair_tier::synthetic;
  fail(errc::malformed_record, "unknown tier " + name);
}

std::vector<labeled_pair> build_weak_dataset(const std::vector<mention>& ms,
                                             const knowledge_base& kb,
                                             double tier_threshold,
                                             int neg_ratio,
                                             const blocking_config& blocking,
                                             rng& r) {
  const pair_tier tier = tier_threshold >= 0.9 ? pair_tier::high_confidence
                                               : pair_tier::low_confidence;
  std::vector<labeled_pair> out;

  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    // Strict unique maximum over the whole knowledge base; ties mean the
    // mention is ambiguous and contributes nothing.
    double best = -1.0;
    double second = -1.0;
    const entity* best_entity = nullptr;
    for (const entity& e : kb.entries()) {
      double s = best_fuzzy(ms[mi].text, e);
      if (s > best) {
        second = best;
        best = s;
        best_entity = &e;
      } else if (s > second) {
        second = s;
      }
    }
    if (!best_entity || best < tier_threshold || best == second) continue;

    out.push_back({mi, best_entity->id, 1, tier});

    // Hard negatives: the mention's other blocking candidates.
    std::vector<candidate_pair> cands = candidates(ms[mi], mi, kb, blocking);
    std::vector<std::string> pool;
    for (const candidate_pair& c : cands) {
      if (c.entity_id != best_entity->id) pool.push_back(c.entity_id);
    }
    r.shuffle(pool);
    const std::size_t take =
        std::min<std::size_t>(pool.size(), static_cast<std::size_t>(neg_ratio));
    for (std::size_t i = 0; i < take; ++i) {
      out.push_back({mi, pool[i], 0, tier});
    }
  }

  bool any_positive = false;
  for (const labeled_pair& p : out) any_positive |= p.label == 1;
  if (!any_positive) fail(errc::no_positives, "no mention produced a positive");
  return out;
}

train_result train_linker(const std::vector<labeled_pair>& dataset,
                          const std::vector<mention>& ms,
                          const knowledge_base& kb, const context_encoder& ctx,
                          linker_model& model, const train_config& cfg) {
  if (dataset.empty()) fail(errc::empty_input, "empty dataset");
  bool has_pos = false;
  bool has_neg = false;
  for (const labeled_pair& p : dataset) {
    (p.label == 1 ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg) {
    fail(errc::single_class_dataset, "need both labels to train");
  }

  // Frozen inputs, computed once: context vectors per mention and anchors
  // per entity.
  std::vector<std::vector<double>> contexts(ms.size());
  std::vector<bool> have_context(ms.size(), false);
  entity_anchors anchors(kb, model.entity_enc);
  for (const labeled_pair& p : dataset) {
    if (p.mention_index >= ms.size()) {
      fail(errc::malformed_record,
           "pair mention_index " + std::to_string(p.mention_index));
    }
    if (!have_context[p.mention_index]) {
      contexts[p.mention_index] =
          ctx.encode_context(ms[p.mention_index].context).values;
      have_context[p.mention_index] = true;
    }
  }

  nn::param_list params = model.surface.params();
  for (nn::param* p : model.scorer.params()) params.push_back(p);

  rng r(cfg.seed);
  std::vector<std::size_t> order(dataset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  train_result result;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    r.shuffle(order);
    double loss_sum = 0.0;
    std::size_t correct = 0;

    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t stop = std::min(
          order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      nn::zero_grads(params);
      for (std::size_t k = start; k < stop; ++k) {
        const labeled_pair& p = dataset[order[k]];
        const entity& e = kb.at(p.entity_id);
        nn::graph g;
        nn::graph::node score =
            model.pair_score_node(g, ms[p.mention_index].text,
                                  contexts[p.mention_index], e, anchors.at(p.entity_id));
        nn::graph::node loss = g.bce(score, p.label);
        loss_sum += g.scalar(loss);
        if ((g.scalar(score) > 0.5 ? 1 : 0) == p.label) ++correct;
        g.backward(loss);
      }
      // Averaged batch gradient via a scaled step.
      nn::sgd_step(params, cfg.lr / static_cast<double>(stop - start));
    }

    result.epochs.push_back(
        {loss_sum / static_cast<double>(dataset.size()),
         static_cast<double>(correct) / static_cast<double>(dataset.size())});
  }
  return result;
}

std::pair<std::vector<labeled_pair>, std::vector<labeled_pair>>
train_test_split(const std::vector<labeled_pair>& dataset,
                 double test_fraction, rng& r) {
  if (dataset.size() < 2) fail(errc::too_small, "need at least 2 pairs");

  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    (dataset[i].label == 1 ? pos : neg).push_back(i);
  }

  std::vector<labeled_pair> train;
  std::vector<labeled_pair> test;
  for (std::vector<std::size_t>* cls : {&pos, &neg}) {
    if (cls->empty()) continue;
    r.shuffle(*cls);
    std::size_t n_test = static_cast<std::size_t>(
        std::llround(static_cast<double>(cls->size()) * test_fraction));
    n_test = std::min(n_test, cls->size());
    for (std::size_t i = 0; i < cls->size(); ++i) {
      (i < n_test ? test : train).push_back(dataset[(*cls)[i]]);
    }
  }

  if (train.empty() || test.empty()) {
    fail(errc::too_small, "split leaves an empty side");
  }
  return {std::move(train), std::move(test)};
}

}  // namespace elink
