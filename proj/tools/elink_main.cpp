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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "elink/error.hpp"
#include "elink/pipeline.hpp"

namespace {

struct cli_overrides {
  std::optional<std::string> entities, mentions, vectors, checkpoint, output,
      pairs, metrics, pairs_export, context_vectors;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  bool linear_head = false;
};

void add_common_flags(CLI::App* cmd, std::string& config_path,
                      cli_overrides& ov) {
  cmd->add_option("--config", config_path,
                  "Configuration file (JSON); flags override it");
  cmd->add_option("--entities", ov.entities, "Entity JSONL file");
  cmd->add_option("--mentions", ov.mentions, "Mention JSONL file");
  cmd->add_option("--vectors", ov.vectors, "Word-vector text file");
  cmd->add_option("--checkpoint", ov.checkpoint, "Model checkpoint file");
  cmd->add_option("--context-vectors", ov.context_vectors,
                  "Precomputed context vectors (key<TAB>values)");
  cmd->add_option("--out", ov.output, "Output file (stdout if omitted)");
  cmd->add_option("--threshold", ov.threshold, "Blocking threshold");
  cmd->add_option("--seed", ov.seed, "Seed for every stochastic step");
  cmd->add_flag("--linear-head", ov.linear_head,
                "Identity instead of relu between the head layers");
}

elink::pipeline_config resolve(const std::string& config_path,
                               const cli_overrides& ov) {
  elink::pipeline_config cfg;
  if (!config_path.empty()) cfg = elink::load_config_file(config_path);
  if (ov.entities) cfg.paths.entities = *ov.entities;
  if (ov.mentions) cfg.paths.mentions = *ov.mentions;
  if (ov.vectors) cfg.paths.vectors = *ov.vectors;
  if (ov.checkpoint) cfg.paths.checkpoint = *ov.checkpoint;
  if (ov.context_vectors) cfg.paths.context_vectors = *ov.context_vectors;
  if (ov.output) cfg.paths.output = *ov.output;
  if (ov.pairs) cfg.paths.pairs = *ov.pairs;
  if (ov.metrics) cfg.paths.metrics = *ov.metrics;
  if (ov.pairs_export) cfg.paths.pairs_export = *ov.pairs_export;
  if (ov.threshold) cfg.blocking_threshold = *ov.threshold;
  if (ov.seed) {
    cfg.seed = *ov.seed;
    cfg.train.seed = *ov.seed;
  }
  if (ov.linear_head) cfg.scorer.linear_head = true;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entity linker: blocking, training, linking, evaluation"};
  app.require_subcommand(1);

  std::string config_path;
  cli_overrides ov;
  std::string fixtures_dir = "fixtures";

  CLI::App* block = app.add_subcommand(
      "block", "Write blocking candidates for every mention");
  add_common_flags(block, config_path, ov);

  CLI::App* train = app.add_subcommand(
      "train", "Pretrain the entity encoder and train the linker");
  add_common_flags(train, config_path, ov);
  train->add_option("--export-pairs", ov.pairs_export,
                    "Also write the weak-supervision dataset");

  CLI::App* link =
      app.add_subcommand("link", "Score mentions against the knowledge base");
  add_common_flags(link, config_path, ov);
  bool explain = false;
  link->add_flag("--explain", explain,
                 "Include every scored candidate in each decision");

  CLI::App* eval =
      app.add_subcommand("eval", "Metrics over a labeled pairs file");
  add_common_flags(eval, config_path, ov);
  eval->add_option("--pairs", ov.pairs, "Labeled pairs JSONL file");
  eval->add_option("--metrics", ov.metrics, "Metrics document output path");

  CLI::App* fixtures =
      app.add_subcommand("fixtures", "Write the built-in demo corpus");
  fixtures->add_option("--out", fixtures_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (block->parsed()) {
      elink::cmd_block(resolve(config_path, ov));
    } else if (train->parsed()) {
      elink::cmd_train(resolve(config_path, ov));
    } else if (link->parsed()) {
      elink::cmd_link(resolve(config_path, ov), explain);
    } else if (eval->parsed()) {
      elink::cmd_eval(resolve(config_path, ov), std::cout);
    } else if (fixtures->parsed()) {
      elink::cmd_fixtures(fixtures_dir);
      std::cerr << "wrote demo corpus to " << fixtures_dir << "\n";
    }
  } catch (const elink::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
