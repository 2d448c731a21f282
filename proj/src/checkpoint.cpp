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

#include "elink/checkpoint.hpp"

#include <filesystem>
#include <fstream>

#include "elink/error.hpp"

namespace elink {

namespace {

using nlohmann::json;

json tensor_to_json(const nn::tensor2& t) {
  return json{{"rows", t.rows}, {"cols", t.cols}, {"data", t.v}};
}

void tensor_from_json(const json& j, nn::tensor2& t, const std::string& name) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  if (rows != t.rows || cols != t.cols) {
    fail(errc::shape_mismatch,
         name + ": stored " + std::to_string(rows) + "x" +
             std::to_string(cols) + ", model wants " + std::to_string(t.rows) +
             "x" + std::to_string(t.cols));
  }
  std::vector<double> data = j.at("data").get<std::vector<double>>();
  if (data.size() != t.v.size()) {
    fail(errc::shape_mismatch, name + ": data length");
  }
  t.v = std::move(data);
}

json layer_to_json(const nn::dense_layer& l) {
  return json{{"w", tensor_to_json(l.w.value)},
              {"b", tensor_to_json(l.b.value)},
              {"activation", nn::activation_name(l.act)}};
}

void layer_from_json(const json& j, nn::dense_layer& l) {
  tensor_from_json(j.at("w"), l.w.value, l.w.name);
  tensor_from_json(j.at("b"), l.b.value, l.b.name);
  nn::activation stored =
      nn::activation_from_name(j.at("activation").get<std::string>());
  if (stored != l.act) {
    fail(errc::bad_config, l.w.name + ": activation mismatch");
  }
}

}  // namespace

void save_checkpoint(const std::string& path, linker_model& model,
                     const pipeline_config& cfg) {
  json j;
  j["version"] = kCheckpointVersion;
  j["seed"] = cfg.seed;
  j["config"] = config_to_json(cfg);
  j["dims"] = {{"d_ctx", model.scorer.mention_proj.in()},
               {"d_word", model.entity_enc.desc_proj.in()}};
  j["surface"] = {{"char_table", tensor_to_json(model.surface.char_table.value)},
                  {"word_proj", layer_to_json(model.surface.word_proj)},
                  {"name_proj", layer_to_json(model.surface.name_proj)}};
  j["triplet"] = {{"desc_proj", layer_to_json(model.entity_enc.desc_proj)},
                  {"margin", model.entity_enc.margin}};
  j["scorer"] = {{"mention_proj", layer_to_json(model.scorer.mention_proj)},
                 {"entity_proj", layer_to_json(model.scorer.entity_proj)},
                 {"head_hidden", layer_to_json(model.scorer.head_hidden)},
                 {"head_out", layer_to_json(model.scorer.head_out)}};

  // Temp-write plus rename keeps a crashed run from leaving a torn file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open " + tmp);
    out << j.dump(2) << '\n';
    if (!out) {
      fail(errc::io_error, "short write to " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(errc::io_error, "rename to " + path + ": " + ec.message());
  }
}

loaded_checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(errc::malformed_record, path + ": not valid JSON");

  auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() ||
      version->get<int>() != kCheckpointVersion) {
    fail(errc::bad_version, path);
  }

  pipeline_config cfg = config_from_json(j.at("config"));
  const int d_ctx = j.at("dims").at("d_ctx").get<int>();
  const int d_word = j.at("dims").at("d_word").get<int>();

  linker_model model(cfg.surface, d_ctx, d_word, cfg.scorer, cfg.train.margin);
  tensor_from_json(j.at("surface").at("char_table"),
                   model.surface.char_table.value,
                   model.surface.char_table.name);
  layer_from_json(j.at("surface").at("word_proj"), model.surface.word_proj);
  layer_from_json(j.at("surface").at("name_proj"), model.surface.name_proj);
  layer_from_json(j.at("triplet").at("desc_proj"), model.entity_enc.desc_proj);
  model.entity_enc.margin = j.at("triplet").at("margin").get<double>();
  layer_from_json(j.at("scorer").at("mention_proj"), model.scorer.mention_proj);
  layer_from_json(j.at("scorer").at("entity_proj"), model.scorer.entity_proj);
  layer_from_json(j.at("scorer").at("head_hidden"), model.scorer.head_hidden);
  layer_from_json(j.at("scorer").at("head_out"), model.scorer.head_out);

  return {std::move(cfg), std::move(model)};
}

}  // namespace elink
