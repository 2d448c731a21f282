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

#include "elink/config.hpp"

#include <fstream>

#include "elink/error.hpp"

namespace elink {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> known,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok |= key == k;
    if (!ok) fail(errc::bad_config, where + ": unknown key \"" + key + "\"");
  }
}

template <typename T>
void read_into(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it != j.end()) out = it->get<T>();
}

}  // namespace

json config_to_json(const pipeline_config& cfg) {
  json j;
  j["blocking_threshold"] = cfg.blocking_threshold;
  j["weak_threshold_high"] = cfg.weak_threshold_high;
  j["weak_threshold_low"] = cfg.weak_threshold_low;
  j["weak_tier"] = cfg.weak_tier;
  j["surface"] = {{"d_c", cfg.surface.d_c},
                  {"d_w", cfg.surface.d_w},
                  {"d_s", cfg.surface.d_s},
                  {"max_chars", cfg.surface.max_chars},
                  {"max_words", cfg.surface.max_words}};
  j["scorer"] = {{"d_f", cfg.scorer.d_f},
                 {"hidden", cfg.scorer.hidden},
                 {"linear_head", cfg.scorer.linear_head},
                 {"decision_threshold", cfg.scorer.decision_threshold}};
  j["triplet"] = {{"k", cfg.triplet_k},
                  {"epochs", cfg.triplet_epochs},
                  {"lr", cfg.triplet_lr}};
  j["train"] = {{"epochs", cfg.train.epochs},
                {"lr", cfg.train.lr},
                {"batch_size", cfg.train.batch_size},
                {"seed", cfg.train.seed},
                {"negative_ratio", cfg.train.negative_ratio},
                {"margin", cfg.train.margin}};
  j["seed"] = cfg.seed;
  j["paths"] = {{"entities", cfg.paths.entities},
                {"mentions", cfg.paths.mentions},
                {"vectors", cfg.paths.vectors},
                {"checkpoint", cfg.paths.checkpoint},
                {"context_vectors", cfg.paths.context_vectors},
                {"output", cfg.paths.output},
                {"pairs", cfg.paths.pairs},
                {"metrics", cfg.paths.metrics},
                {"pairs_export", cfg.paths.pairs_export}};
  return j;
}

pipeline_config config_from_json(const json& j) {
  if (!j.is_object()) fail(errc::bad_config, "config is not an object");
  check_keys(j,
             {"blocking_threshold", "weak_threshold_high", "weak_threshold_low",
              "weak_tier", "surface", "scorer", "triplet", "train", "seed",
              "paths"},
             "config");

  pipeline_config cfg;
  read_into(j, "blocking_threshold", cfg.blocking_threshold);
  read_into(j, "weak_threshold_high", cfg.weak_threshold_high);
  read_into(j, "weak_threshold_low", cfg.weak_threshold_low);
  read_into(j, "weak_tier", cfg.weak_tier);
  if (cfg.weak_tier != "high" && cfg.weak_tier != "low") {
    fail(errc::bad_config, "weak_tier must be \"high\" or \"low\"");
  }

  if (auto it = j.find("surface"); it != j.end()) {
    check_keys(*it, {"d_c", "d_w", "d_s", "max_chars", "max_words"}, "surface");
    read_into(*it, "d_c", cfg.surface.d_c);
    read_into(*it, "d_w", cfg.surface.d_w);
    read_into(*it, "d_s", cfg.surface.d_s);
    read_into(*it, "max_chars", cfg.surface.max_chars);
    read_into(*it, "max_words", cfg.surface.max_words);
  }
  if (auto it = j.find("scorer"); it != j.end()) {
    check_keys(*it, {"d_f", "hidden", "linear_head", "decision_threshold"},
               "scorer");
    read_into(*it, "d_f", cfg.scorer.d_f);
    read_into(*it, "hidden", cfg.scorer.hidden);
    read_into(*it, "linear_head", cfg.scorer.linear_head);
    read_into(*it, "decision_threshold", cfg.scorer.decision_threshold);
  }
  if (auto it = j.find("triplet"); it != j.end()) {
    check_keys(*it, {"k", "epochs", "lr"}, "triplet");
    read_into(*it, "k", cfg.triplet_k);
    read_into(*it, "epochs", cfg.triplet_epochs);
    read_into(*it, "lr", cfg.triplet_lr);
  }
  if (auto it = j.find("train"); it != j.end()) {
    check_keys(*it, {"epochs", "lr", "batch_size", "seed", "negative_ratio", "margin"},
               "train");
    read_into(*it, "epochs", cfg.train.epochs);
    read_into(*it, "lr", cfg.train.lr);
    read_into(*it, "batch_size", cfg.train.batch_size);
    read_into(*it, "seed", cfg.train.seed);
    read_into(*it, "negative_ratio", cfg.train.negative_ratio);
    read_into(*it, "margin", cfg.train.margin);
  }
  read_into(j, "seed", cfg.seed);
  if (auto it = j.find("paths"); it != j.end()) {
    check_keys(*it,
               {"entities", "mentions", "vectors", "checkpoint",
                "context_vectors", "output", "pairs", "metrics", "pairs_export"},
               "paths");
    read_into(*it, "entities", cfg.paths.entities);
    read_into(*it, "mentions", cfg.paths.mentions);
    read_into(*it, "vectors", cfg.paths.vectors);
    read_into(*it, "checkpoint", cfg.paths.checkpoint);
    read_into(*it, "context_vectors", cfg.paths.context_vectors);
    read_into(*it, "output", cfg.paths.output);
    read_into(*it, "pairs", cfg.paths.pairs);
    read_into(*it, "metrics", cfg.paths.metrics);
    read_into(*it, "pairs_export", cfg.paths.pairs_export);
  }

  if (cfg.blocking_threshold < 0.0 || cfg.blocking_threshold > 1.0) {
    fail(errc::bad_config, "blocking_threshold outside [0, 1]");
  }
  if (cfg.train.epochs < 0 || cfg.train.lr <= 0.0 || cfg.train.batch_size <= 0 ||
      cfg.train.negative_ratio < 1 || cfg.train.margin <= 0.0) {
    fail(errc::bad_config, "bad train section");
  }
  return cfg;
}

pipeline_config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(errc::bad_config, path + ": not valid JSON");
  return config_from_json(j);
}

void write_config_file(const pipeline_config& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path);
  out << config_to_json(cfg).dump(2) << '\n';
}

}  // namespace elink
