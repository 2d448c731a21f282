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

#include "elink/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "elink/blocking.hpp"
#include "elink/error.hpp"
#include "elink/semantic.hpp"

namespace elink {

namespace {

using nlohmann::json;

json artifact_header(const char* type, const pipeline_config& cfg) {
  return json{{"type", type},
              {"version", kCheckpointVersion},
              {"config", config_to_json(cfg)}};
}

// Runs `body` with the configured output file, or stdout when unset.
template <typename Fn>
void with_output(const std::string& path, Fn&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open " + path);
  body(out);
  if (!out) fail(errc::io_error, "short write to " + path);
}

}  // namespace

void write_labeled_pairs(const std::vector<labeled_pair>& pairs,
                         const pipeline_config& cfg, std::ostream& out) {
  out << artifact_header("pairs", cfg).dump() << '\n';
  for (const labeled_pair& p : pairs) {
    json j;
    j["mention_index"] = p.mention_index;
    j["entity_id"] = p.entity_id;
    j["label"] = p.label;
    j["tier"] = pair_tier_name(p.tier);
    out << j.dump() << '\n';
  }
}

std::vector<labeled_pair> load_labeled_pairs(std::istream& in) {
  std::vector<labeled_pair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      fail(errc::malformed_record, "line " + std::to_string(line_no));
    }
    if (j.contains("type")) continue;  // artifact header
    labeled_pair p;
    try {
      p.mention_index = j.at("mention_index").get<std::size_t>();
      p.entity_id = j.at("entity_id").get<std::string>();
      p.label = j.at("label").get<int>();
      p.tier = pair_tier_from_name(j.at("tier").get<std::string>());
    } catch (const json::exception&) {
      fail(errc::malformed_record, "line " + std::to_string(line_no));
    }
    if (p.label != 0 && p.label != 1) {
      fail(errc::malformed_record,
           "line " + std::to_string(line_no) + ": label must be 0 or 1");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<labeled_pair> load_labeled_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  return load_labeled_pairs(in);
}

std::unique_ptr<context_encoder> make_context_encoder(
    const pipeline_config& cfg, const word_vectors& wv) {
  if (!cfg.paths.context_vectors.empty()) {
    return std::make_unique<precomputed_vectors>(
        precomputed_vectors::load_file(cfg.paths.context_vectors));
  }
  return std::make_unique<bag_of_embeddings>(wv);
}

void cmd_block(const pipeline_config& cfg) {
  const knowledge_base kb = load_entities_file(cfg.paths.entities);
  const std::vector<mention> ms = load_mentions_file(cfg.paths.mentions);
  const blocking_config bc{cfg.blocking_threshold};
  const auto per_mention = candidates_batch(ms, kb, bc);

  with_output(cfg.paths.output, [&](std::ostream& out) {
    out << artifact_header("candidates", cfg).dump() << '\n';
    for (std::size_t i = 0; i < per_mention.size(); ++i) {
      for (const candidate_pair& c : per_mention[i]) {
        json j;
        j["mention_index"] = c.mention_index;
        j["doc_id"] = ms[i].doc_id;
        j["text"] = ms[i].text;
        j["entity_id"] = c.entity_id;
        j["fuzzy_score"] = c.fuzzy_score;
        out << j.dump() << '\n';
      }
    }
  });
}

void cmd_train(const pipeline_config& cfg) {
  const knowledge_base kb = load_entities_file(cfg.paths.entities);
  const std::vector<mention> ms = load_mentions_file(cfg.paths.mentions);
  const word_vectors wv = load_word_vectors_file(cfg.paths.vectors);
  const auto ctx = make_context_encoder(cfg, wv);

  rng r(cfg.seed);
  linker_model model(cfg.surface, ctx->dim(), wv.dim(), cfg.scorer,
                     cfg.train.margin);
  model.bind_vectors(wv);
  model.init(r);

  const auto triplets = build_triplets(kb, wv, r, cfg.triplet_k);
  train_triplet(model.entity_enc, triplets, kb, cfg.triplet_epochs,
                cfg.triplet_lr, r);

  const blocking_config bc{cfg.blocking_threshold};
  const auto dataset = build_weak_dataset(ms, kb, cfg.weak_threshold(),
                                          cfg.train.negative_ratio, bc, r);
  if (!cfg.paths.pairs_export.empty()) {
    with_output(cfg.paths.pairs_export,
                [&](std::ostream& out) { write_labeled_pairs(dataset, cfg, out); });
  }

  train_linker(dataset, ms, kb, *ctx, model, cfg.train);
  save_checkpoint(cfg.paths.checkpoint, model, cfg);
}

void cmd_link(const pipeline_config& cfg, bool explain) {
  loaded_checkpoint loaded = load_checkpoint(cfg.paths.checkpoint);
  linker_model& model = loaded.model;

  const knowledge_base kb = load_entities_file(cfg.paths.entities);
  const std::vector<mention> ms = load_mentions_file(cfg.paths.mentions);
  const word_vectors wv = load_word_vectors_file(cfg.paths.vectors);
  model.bind_vectors(wv);
  const auto ctx = make_context_encoder(cfg, wv);
  if (ctx->dim() != model.scorer.mention_proj.in()) {
    fail(errc::dim_mismatch,
         "context encoder is " + std::to_string(ctx->dim()) +
             "-dimensional, checkpoint expects " +
             std::to_string(model.scorer.mention_proj.in()));
  }

  const entity_anchors anchors(kb, model.entity_enc);
  const blocking_config bc{cfg.blocking_threshold};
  const auto per_mention = candidates_batch(ms, kb, bc);

  with_output(cfg.paths.output, [&](std::ostream& out) {
    out << artifact_header("decisions", cfg).dump() << '\n';
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::vector<scored_candidate> scored;
      link_decision d = link_mention(model, *ctx, anchors, ms[i], i,
                                     per_mention[i], kb,
                                     explain ? &scored : nullptr);
      json j;
      j["doc_id"] = ms[i].doc_id;
      j["text"] = ms[i].text;
      if (d.entity_id) {
        j["entity_id"] = *d.entity_id;
        j["score"] = d.score;
      } else {
        j["entity_id"] = nullptr;
        j["score"] = 0.0;
      }
      j["linked"] = d.linked;
      if (explain) {
        json cands = json::array();
        for (const scored_candidate& sc : scored) {
          cands.push_back({{"entity_id", sc.candidate.entity_id},
                           {"fuzzy_score", sc.candidate.fuzzy_score},
                           {"score", sc.score}});
        }
        j["candidates"] = cands;
      }
      out << j.dump() << '\n';
    }
  });
}

eval_report cmd_eval(const pipeline_config& cfg, std::ostream& table_out) {
  loaded_checkpoint loaded = load_checkpoint(cfg.paths.checkpoint);
  linker_model& model = loaded.model;

  const knowledge_base kb = load_entities_file(cfg.paths.entities);
  const std::vector<mention> ms = load_mentions_file(cfg.paths.mentions);
  validate_gold_ids(ms, kb);
  const word_vectors wv = load_word_vectors_file(cfg.paths.vectors);
  model.bind_vectors(wv);
  const auto ctx = make_context_encoder(cfg, wv);
  if (ctx->dim() != model.scorer.mention_proj.in()) {
    fail(errc::dim_mismatch, "context encoder does not match checkpoint");
  }

  const std::vector<labeled_pair> pairs =
      load_labeled_pairs_file(cfg.paths.pairs);
  if (pairs.empty()) fail(errc::empty_input, cfg.paths.pairs);
  {
    bool pos = false, neg = false;
    for (const labeled_pair& p : pairs) (p.label == 1 ? pos : neg) = true;
    if (!pos || !neg) {
      fail(errc::single_class, "labeled pairs must contain both classes");
    }
  }

  const entity_anchors anchors(kb, model.entity_enc);
  std::vector<std::vector<double>> contexts(ms.size());
  std::vector<bool> have_context(ms.size(), false);

  std::vector<std::pair<bool, bool>> decisions;
  std::vector<std::pair<double, bool>> scored;
  // mention -> (entity, score, label) for per-mention resolution accuracy.
  std::map<std::size_t, std::vector<std::pair<std::string, std::pair<double, int>>>>
      by_mention;

  for (const labeled_pair& p : pairs) {
    if (p.mention_index >= ms.size()) {
      fail(errc::malformed_record,
           "pair mention_index " + std::to_string(p.mention_index));
    }
    const entity* e = kb.find(p.entity_id);
    if (!e) fail(errc::missing_key, "pair entity " + p.entity_id);
    if (!have_context[p.mention_index]) {
      contexts[p.mention_index] =
          ctx->encode_context(ms[p.mention_index].context).values;
      have_context[p.mention_index] = true;
    }
    double s = model.score(ms[p.mention_index].text, contexts[p.mention_index],
                           *e, anchors.at(p.entity_id));
    decisions.emplace_back(model.scorer.decide(s), p.label == 1);
    scored.emplace_back(s, p.label == 1);
    by_mention[p.mention_index].push_back({p.entity_id, {s, p.label}});
  }

  eval_report report;
  report.pair_count = pairs.size();
  report.counts = confusion(decisions);
  report.pairwise = prf(report.counts);
  report.auc = roc_auc(scored);

  std::size_t correct = 0;
  for (const auto& [mi, rows] : by_mention) {
    // Resolution: best passing score, ties toward the smaller entity id.
    const std::string* chosen = nullptr;
    double best = 0.0;
    std::set<std::string> gold;
    for (const auto& [id, score_label] : rows) {
      if (score_label.second == 1) gold.insert(id);
      if (!model.scorer.decide(score_label.first)) continue;
      if (!chosen || score_label.first > best ||
          (score_label.first == best && id < *chosen)) {
        chosen = &id;
        best = score_label.first;
      }
    }
    const bool ok = chosen ? gold.count(*chosen) > 0 : gold.empty();
    correct += ok ? 1 : 0;
  }
  report.mention_count = by_mention.size();
  report.per_mention_accuracy =
      static_cast<double>(correct) / static_cast<double>(by_mention.size());

  table_out << format_metrics_table(report);

  if (!cfg.paths.metrics.empty()) {
    json doc = artifact_header("metrics", cfg);
    doc["pairs"] = report.pair_count;
    doc["counts"] = {{"tp", report.counts.tp},
                     {"fp", report.counts.fp},
                     {"tn", report.counts.tn},
                     {"fn", report.counts.fn}};
    doc["accuracy"] = report.pairwise.accuracy;
    doc["precision"] = report.pairwise.precision
                           ? json(*report.pairwise.precision)
                           : json(nullptr);
    doc["recall"] =
        report.pairwise.recall ? json(*report.pairwise.recall) : json(nullptr);
    doc["f1"] = report.pairwise.f1 ? json(*report.pairwise.f1) : json(nullptr);
    doc["auc"] = report.auc;
    doc["per_mention_accuracy"] = report.per_mention_accuracy;
    doc["mentions"] = report.mention_count;
    with_output(cfg.paths.metrics,
                [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  }
  return report;
}

std::string format_metrics_table(const eval_report& report) {
  auto cell = [](const std::optional<double>& v) {
    if (!v) return std::string("undefined");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "pairs     accuracy  precision recall    f1        auc\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-9zu %-9.4f %-9s %-9s %-9s %-9.4f\n",
                report.pair_count, report.pairwise.accuracy,
                cell(report.pairwise.precision).c_str(),
                cell(report.pairwise.recall).c_str(),
                cell(report.pairwise.f1).c_str(), report.auc);
  out << line;
  std::snprintf(line, sizeof(line),
                "per-mention accuracy: %.4f over %zu mentions\n",
                report.per_mention_accuracy, report.mention_count);
  out << line;
  return out.str();
}

}  // namespace elink
