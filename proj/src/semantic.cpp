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

#include "elink/semantic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "elink/error.hpp"

namespace elink {

namespace {

// Distinct in-vocabulary tokens of one description, sorted.
std::vector<std::string> desc_vocab(const entity& e, const word_vectors& wv) {
  std::set<std::string> seen;
  for (const std::string& t : tokenize(e.description)) {
    if (wv.find(t)) seen.insert(t);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

context_vector bag_of_embeddings::encode_context(
    const std::string& text) const {
  std::vector<std::string> tokens = tokenize(text);
  context_vector out;
  out.values = wv_->mean_pool(tokens);
  for (const std::string& t : tokens) {
    if (wv_->find(t)) {
      out.has_context = true;
      break;
    }
  }
  return out;
}

void precomputed_vectors::insert(const std::string& key,
                                 std::vector<double> values) {
  if (static_cast<int>(values.size()) != dim_) {
    fail(errc::dim_mismatch, "key " + key);
  }
  for (double v : values) {
    if (!std::isfinite(v)) fail(errc::non_finite_value, "key " + key);
  }
  if (!table_.emplace(key, std::move(values)).second) {
    fail(errc::duplicate_token, key);
  }
}

precomputed_vectors precomputed_vectors::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail(errc::bad_header, "empty stream");
  std::istringstream hs(header);
  int dim = -1;
  std::string extra;
  if (!(hs >> dim) || (hs >> extra) || dim <= 0) {
    fail(errc::bad_header, "expected a dimension, got \"" + header + "\"");
  }

  precomputed_vectors pv(dim);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(errc::malformed_record,
           "line " + std::to_string(line_no) + ": missing tab");
    }
    std::string key = line.substr(0, tab);
    std::istringstream vs(line.substr(tab + 1));
    std::vector<double> values;
    double v = 0.0;
    while (vs >> v) values.push_back(v);
    if (!vs.eof()) {
      fail(errc::malformed_record, "line " + std::to_string(line_no));
    }
    pv.insert(key, std::move(values));
  }
  return pv;
}

precomputed_vectors precomputed_vectors::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  return load(in);
}

context_vector precomputed_vectors::encode_context(
    const std::string& text) const {
  auto it = table_.find(text);
  if (it == table_.end()) {
    fail(errc::missing_key, "no precomputed vector for \"" + text + "\"");
  }
  return {it->second, true};
}

void triplet_encoder::bind(const word_vectors& vectors) {
  if (vectors.dim() != desc_proj.in()) {
    fail(errc::dim_mismatch, "word vectors are " +
                                 std::to_string(vectors.dim()) +
                                 "-dimensional, encoder expects " +
                                 std::to_string(desc_proj.in()));
  }
  wv = &vectors;
}

triplet_encoder::entity_vector triplet_encoder::encode_entity_desc(
    const entity& e) const {
  std::vector<std::string> tokens = tokenize(e.description);
  bool any = false;
  for (const std::string& t : tokens) {
    if (wv->find(t)) {
      any = true;
      break;
    }
  }
  // No description signal means a zero anchor, not the projection bias:
  // otherwise every blank entity would share one spurious non-zero anchor.
  if (!any) {
    return {std::vector<double>(static_cast<std::size_t>(entity_dim()), 0.0),
            false};
  }
  return {nn::dense_forward(desc_proj, wv->mean_pool(tokens)), true};
}

nn::graph::node triplet_encoder::anchor_node(nn::graph& g, const entity& e) {
  return g.dense(desc_proj, g.constant(wv->mean_pool(tokenize(e.description))));
}

std::vector<triplet_example> build_triplets(const knowledge_base& kb,
                                            const word_vectors& wv, rng& r,
                                            int k) {
  // Document frequencies over the distinct in-vocabulary tokens per entity.
  std::map<std::string, int> df;
  std::vector<std::vector<std::string>> vocab_per_entity(kb.size());
  std::size_t with_tokens = 0;
  for (std::size_t i = 0; i < kb.size(); ++i) {
    vocab_per_entity[i] = desc_vocab(kb.entries()[i], wv);
    if (!vocab_per_entity[i].empty()) ++with_tokens;
    for (const std::string& t : vocab_per_entity[i]) ++df[t];
  }

  std::vector<std::string> global_tokens;
  global_tokens.reserve(df.size());
  for (const auto& [token, count] : df) global_tokens.push_back(token);

  const double n_docs = static_cast<double>(with_tokens);
  std::vector<triplet_example> out;

  for (std::size_t i = 0; i < kb.size(); ++i) {
    const entity& e = kb.entries()[i];
    if (vocab_per_entity[i].empty()) continue;

    std::map<std::string, int> tf;
    for (const std::string& t : tokenize(e.description)) {
      if (wv.find(t)) ++tf[t];
    }

    // Top-k by tf-idf, ties broken by token so the ranking is total.
    std::vector<std::pair<double, std::string>> scored;
    scored.reserve(tf.size());
    for (const auto& [token, count] : tf) {
      double idf = std::log((1.0 + n_docs) / (1.0 + df[token])) + 1.0;
      scored.emplace_back(count * idf, token);
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
              });
    if (static_cast<int>(scored.size()) > k) {
      scored.resize(static_cast<std::size_t>(k));
    }

    const std::set<std::string> own(vocab_per_entity[i].begin(),
                                    vocab_per_entity[i].end());
    for (const auto& [score, positive] : scored) {
      bool drawn = false;
      std::string negative;
      for (int attempt = 0; attempt < 100; ++attempt) {
        const std::string& cand =
            global_tokens[r.uniform_index(global_tokens.size())];
        if (!own.count(cand)) {
          negative = cand;
          drawn = true;
          break;
        }
      }
      if (drawn) out.push_back({e.id, positive, negative});
    }
  }

  if (out.empty()) {
    fail(errc::no_eligible_entities, "no entity produced a triplet");
  }
  return out;
}

triplet_train_result train_triplet(triplet_encoder& enc,
                                   const std::vector<triplet_example>& triplets,
                                   const knowledge_base& kb, int epochs,
                                   double lr, rng& r) {
  if (triplets.empty()) fail(errc::empty_input, "no triplets");

  // The pooled description and the word vectors are constants; only
  // desc_proj trains.
  struct prepared {
    std::vector<double> pooled;
    const std::vector<double>* positive;
    const std::vector<double>* negative;
  };
  std::vector<prepared> data;
  data.reserve(triplets.size());
  for (const triplet_example& t : triplets) {
    const entity& e = kb.at(t.entity_id);
    const std::vector<double>* p = enc.wv->find(t.positive_word);
    const std::vector<double>* n = enc.wv->find(t.negative_word);
    if (!p || !n) fail(errc::missing_key, "triplet word out of vocabulary");
    data.push_back({enc.wv->mean_pool(tokenize(e.description)), p, n});
  }

  nn::param_list params = enc.params();
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  triplet_train_result result;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    r.shuffle(order);
    double loss_sum = 0.0;
    for (std::size_t idx : order) {
      const prepared& ex = data[idx];
      nn::graph g;
      nn::graph::node anchor = g.dense(enc.desc_proj, g.constant(ex.pooled));
      nn::graph::node d_pos = g.cosine_distance(anchor, g.constant(*ex.positive));
      nn::graph::node d_neg = g.cosine_distance(anchor, g.constant(*ex.negative));
      nn::graph::node loss = g.triplet_hinge(d_pos, d_neg, enc.margin);
      loss_sum += g.scalar(loss);
      nn::zero_grads(params);
      g.backward(loss);
      nn::sgd_step(params, lr);
    }
    result.epoch_mean_loss.push_back(loss_sum /
                                     static_cast<double>(data.size()));
  }
  return result;
}

}  // namespace elink
