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

#include "elink/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "elink/blocking.hpp"
#include "elink/error.hpp"
#include "elink/pipeline.hpp"
#include "elink/rng.hpp"
#include "elink/trainer.hpp"

namespace elink {

namespace {

const std::vector<std::vector<std::string>> kTopicVocab = {
    // politics
    {"government", "parliament", "election", "policy", "minister", "senate",
     "debate", "vote"},
    // finance
    {"bank", "investment", "fund", "trading", "capital", "economy", "stock",
     "portfolio"},
    // film
    {"film", "director", "movie", "cinema", "actor", "studio", "screen",
     "premiere"},
    // tech
    {"software", "computer", "startup", "engineering", "internet", "data",
     "code", "robot"},
    // farming
    {"farm", "cattle", "harvest", "livestock", "crops", "ranch",
     "agriculture", "tractor"},
};

const std::vector<std::string> kFillerVocab = {
    "news", "said", "about", "company", "people",
    "work", "today", "report", "group", "year"};

struct demo_entity {
  const char* id;
  const char* name;
  int topic;
  const char* description;
};

// Descriptions lean on the topic vocabulary so description pooling and
// triplet training have signal; connective words are out of vocabulary and
// drop out of the pooling.
const demo_entity kEntities[] = {
    {"p-adam", "Joseph Adam", 0,
     "minister in the government known for parliament debate and policy work "
     "on every vote"},
    {"p-davis", "David Davis", 0,
     "politician serving in parliament with election policy debate and "
     "government votes in the senate"},
    {"f-miller", "Mary Miller", 1,
     "investor leading a capital fund with stock trading portfolio and "
     "investment strategy at a bank"},
    {"f-gates", "William Gates", 1,
     "financier running an investment bank with fund trading capital and "
     "economy research"},
    {"m-nolan", "Christopher Nolan", 2,
     "director of cinema known for studio film and movie premiere work on "
     "the big screen"},
    {"m-miller", "Mark Miller", 2,
     "actor appearing on screen in studio movie and cinema premiere roles"},
    {"t-musk", "Elon Musk", 3,
     "engineer building software robot and internet data systems at a "
     "startup with code"},
    {"t-gates", "Bill Gates", 3,
     "software pioneer working on computer code internet platforms and "
     "engineering data"},
    {"g-davis", "David Davis", 4,
     "businessman who owns a farm raising cattle and livestock with harvest "
     "crops and a tractor"},
    {"g-smith", "Dave Smith", 4,
     "rancher managing agriculture tractor and cattle herds on a ranch with "
     "crops"},
};

struct demo_mention {
  const char* doc_id;
  const char* text;
  int topic;       // context topic
  const char* gold;
};

// Exact-name mentions feed weak supervision (unique fuzzy maximum 1.0);
// variant-name mentions exercise blocking and linking. The "david davis"
// mention ties two entities at fuzzy 1.0, so weak labeling skips it and
// only the trained model can resolve it.
const demo_mention kMentions[] = {
    {"d01", "Joseph Adam", 0, "p-adam"},
    {"d02", "Mary Miller", 1, "f-miller"},
    {"d03", "William Gates", 1, "f-gates"},
    {"d04", "Christopher Nolan", 2, "m-nolan"},
    {"d05", "Mark Miller", 2, "m-miller"},
    {"d06", "Elon Musk", 3, "t-musk"},
    {"d07", "Bill Gates", 3, "t-gates"},
    {"d08", "Dave Smith", 4, "g-smith"},
    {"d09", "Joseph Adam", 0, "p-adam"},
    {"d10", "Mary Miller", 1, "f-miller"},
    {"d11", "Bill Gates", 3, "t-gates"},
    {"d12", "Mark Miller", 2, "m-miller"},
    {"d13", "Joe Adam", 0, "p-adam"},
    {"d14", "Chris Nolan", 2, "m-nolan"},
    {"d15", "David Davis", 0, "p-davis"},
};

std::string context_for(int topic, rng& r) {
  // Four topical words plus two fillers, seeded.
  std::string out;
  const auto& vocab = kTopicVocab[static_cast<std::size_t>(topic)];
  for (int i = 0; i < 4; ++i) {
    if (!out.empty()) out += ' ';
    out += vocab[r.uniform_index(vocab.size())];
  }
  for (int i = 0; i < 2; ++i) {
    out += ' ';
    out += kFillerVocab[r.uniform_index(kFillerVocab.size())];
  }
  return out;
}

}  // namespace

demo_corpus make_demo_corpus() {
  demo_corpus corpus;
  corpus.politician_id = "p-davis";
  corpus.farmer_id = "g-davis";

  for (const demo_entity& de : kEntities) {
    entity e;
    e.id = de.id;
    e.name = normalize(de.name);
    e.description = normalize(de.description);
    corpus.kb.add(std::move(e));
  }

  rng r(20260810);
  for (const demo_mention& dm : kMentions) {
    mention m;
    m.doc_id = dm.doc_id;
    m.text = normalize(dm.text);
    m.context = context_for(dm.topic, r);
    m.gold_id = dm.gold;
    corpus.mentions.push_back(std::move(m));
  }

  // Seeded 50-dimensional vectors for the full topic and filler vocabulary.
  corpus.vectors = word_vectors(50);
  for (const auto& vocab : kTopicVocab) {
    for (const std::string& token : vocab) {
      std::vector<double> v(50);
      for (double& x : v) x = r.uniform(-0.5, 0.5);
      corpus.vectors.insert(token, std::move(v));
    }
  }
  for (const std::string& token : kFillerVocab) {
    std::vector<double> v(50);
    for (double& x : v) x = r.uniform(-0.5, 0.5);
    corpus.vectors.insert(token, std::move(v));
  }
  return corpus;
}

void cmd_fixtures(const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(errc::io_error, out_dir + ": " + ec.message());

  demo_corpus corpus = make_demo_corpus();
  const fs::path dir(out_dir);

  auto open = [](const fs::path& p) {
    std::ofstream out(p, std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open " + p.string());
    return out;
  };

  {
    std::ofstream out = open(dir / "entities.jsonl");
    write_entities(corpus.kb, out);
  }
  {
    std::ofstream out = open(dir / "mentions.jsonl");
    write_mentions(corpus.mentions, out);
  }
  {
    std::ofstream out = open(dir / "vectors.txt");
    write_word_vectors(corpus.vectors, out);
  }

  pipeline_config cfg;
  cfg.paths.entities = (dir / "entities.jsonl").string();
  cfg.paths.mentions = (dir / "mentions.jsonl").string();
  cfg.paths.vectors = (dir / "vectors.txt").string();
  cfg.paths.checkpoint = (dir / "checkpoint.json").string();
  cfg.paths.pairs = (dir / "pairs.jsonl").string();

  {
    rng r(cfg.seed);
    std::vector<labeled_pair> pairs =
        build_weak_dataset(corpus.mentions, corpus.kb, cfg.weak_threshold(),
                           cfg.train.negative_ratio,
                           blocking_config{cfg.blocking_threshold}, r);
    std::ofstream out = open(dir / "pairs.jsonl");
    write_labeled_pairs(pairs, cfg, out);
  }

  write_config_file(cfg, (dir / "config.json").string());
}

}  // namespace elink
