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
#include <vector>

#include "elink/checkpoint.hpp"
#include "elink/config.hpp"
#include "elink/metrics.hpp"
#include "elink/trainer.hpp"

namespace elink {

// Labeled-pair JSONL: {"mention_index","entity_id","label","tier"}.
// Writers prepend a {"type":"pairs", ...} header carrying the config echo;
// the loader skips any record with a "type" field.
void write_labeled_pairs(const std::vector<labeled_pair>& pairs,
                         const pipeline_config& cfg, std::ostream& out);
std::vector<labeled_pair> load_labeled_pairs(std::istream& in);
std::vector<labeled_pair> load_labeled_pairs_file(const std::string& path);

// Precomputed context vectors when cfg.paths.context_vectors is set,
// otherwise bag-of-embeddings over wv (which must outlive the encoder).
std::unique_ptr<context_encoder> make_context_encoder(
    const pipeline_config& cfg, const word_vectors& wv);

// Candidate generation to cfg.paths.output (stdout if empty). The first
// line is a {"type":"candidates"} header with the config echo; each record
// is {"mention_index","doc_id","text","entity_id","fuzzy_score"}.
void cmd_block(const pipeline_config& cfg);

// Triplet pretraining, weak-supervision dataset, end-to-end training, then
// one atomic checkpoint write. Exports the weak dataset to
// cfg.paths.pairs_export when set.
void cmd_train(const pipeline_config& cfg);

// Decisions per mention to cfg.paths.output (stdout if empty):
// {"doc_id","text","entity_id"|null,"score","linked"}; with explain, also
// the scored candidate list.
void cmd_link(const pipeline_config& cfg, bool explain = false);

struct eval_report {
  confusion_counts counts;
  prf_result pairwise;
  double auc = 0.0;
  double per_mention_accuracy = 0.0;
  std::size_t mention_count = 0;
  std::size_t pair_count = 0;
};

// Scores the labeled pairs in cfg.paths.pairs with the checkpoint, prints
// an aligned table to `table_out`, and writes a metrics document to
// cfg.paths.metrics when set.
eval_report cmd_eval(const pipeline_config& cfg, std::ostream& table_out);

// Writes the built-in demo corpus (entities.jsonl, mentions.jsonl,
// vectors.txt, pairs.jsonl, config.json) into out_dir.
void cmd_fixtures(const std::string& out_dir);

std::string format_metrics_table(const eval_report& report);

}  // namespace elink
