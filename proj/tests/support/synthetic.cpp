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

#include "support/synthetic.hpp"

#include <set>

namespace elink::testsupport {

namespace {

const std::vector<std::vector<std::string>> kTopics = {
    {"government", "parliament", "election", "policy", "minister", "senate",
     "debate", "vote"},
    {"farm", "cattle", "harvest", "livestock", "crops", "ranch",
     "agriculture", "tractor"},
    {"bank", "investment", "fund", "trading", "capital", "economy", "stock",
     "portfolio"},
    {"film", "director", "movie", "cinema", "actor", "studio", "screen",
     "premiere"},
    {"software", "computer", "startup", "engineering", "internet", "data",
     "code", "robot"},
    {"hospital", "doctor", "surgery", "clinic", "patient", "nurse",
     "medicine", "therapy"},
    {"team", "coach", "league", "match", "stadium", "player", "tournament",
     "goal"},
    {"album", "concert", "band", "guitar", "melody", "orchestra", "singer",
     "tour"},
    {"court", "judge", "lawsuit", "trial", "attorney", "verdict", "legal",
     "justice"},
    {"laboratory", "research", "physics", "chemistry", "experiment", "theory",
     "journal", "professor"},
};

const std::vector<std::string> kFirstNames = {
    "marcus", "helena", "victor",  "sandra", "gregor", "amelia", "roland",
    "teresa", "walter", "ingrid",  "oscar",  "bianca", "felix",  "norah",
    "hector", "paula",  "quentin", "rosa",   "simon",  "ulrike", "bernard",
    "clara",  "dmitri", "estelle", "franz",
};

const std::vector<std::string> kLastNames = {
    "whitfield", "arnesen", "bellamy",  "castellan", "draper",   "eriksen",
    "fontaine",  "garrity", "holloway", "ivanov",    "jessup",   "kendrick",
    "lambert",   "mercado", "norwood",  "osborne",   "pellerin", "quimby",
    "rochester", "sagmoen", "thatcher", "underhill", "vasquez",  "winslow",
    "yarrow",
};

std::string sample_words(const std::vector<std::string>& vocab, int count,
                         rng& r) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    out += vocab[r.uniform_index(vocab.size())];
  }
  return out;
}

// Drops one interior character so the variant stays fuzzy-close.
std::string name_variant(const std::string& name, rng& r) {
  std::string out = name;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::size_t i = 1 + r.uniform_index(out.size() - 2);
    if (out[i] != ' ') {
      out.erase(i, 1);
      return out;
    }
  }
  out.erase(1, 1);
  return out;
}

word_vectors make_vectors(int dim, rng& r) {
  word_vectors wv(dim);
  for (const auto& vocab : kTopics) {
    for (const std::string& token : vocab) {
      std::vector<double> v(static_cast<std::size_t>(dim));
      for (double& x : v) x = r.uniform(-0.5, 0.5);
      wv.insert(token, std::move(v));
    }
  }
  return wv;
}

}  // namespace

topic_corpus make_topic_corpus(int n_entities, int tokens_per_topic,
                               int vec_dim, std::uint64_t seed) {
  rng r(seed);
  topic_corpus corpus;
  corpus.wv = word_vectors(vec_dim);
  corpus.vocab_per_entity.resize(static_cast<std::size_t>(n_entities));

  // Disjoint vocabularies: entity i owns tokens "w<i>a".."w<i>h" styled as
  // topic<i>word<j>.
  for (int i = 0; i < n_entities; ++i) {
    for (int j = 0; j < tokens_per_topic; ++j) {
      std::string token =
          "topic" + std::to_string(i) + "word" + std::to_string(j);
      std::vector<double> v(static_cast<std::size_t>(vec_dim));
      for (double& x : v) x = r.uniform(-0.5, 0.5);
      corpus.wv.insert(token, v);
      corpus.vocab_per_entity[static_cast<std::size_t>(i)].push_back(token);
    }
  }

  for (int i = 0; i < n_entities; ++i) {
    entity e;
    e.id = "e" + std::to_string(i);
    e.name = kFirstNames[static_cast<std::size_t>(i) % kFirstNames.size()] +
             " " +
             kLastNames[static_cast<std::size_t>(i) % kLastNames.size()];
    e.description = sample_words(
        corpus.vocab_per_entity[static_cast<std::size_t>(i)], 6, r);
    corpus.kb.add(std::move(e));
  }
  return corpus;
}

linking_corpus make_linking_corpus(std::uint64_t seed) {
  rng r(seed);
  linking_corpus corpus;
  corpus.wv = make_vectors(16, r);
  corpus.twin_politics_id = "twin-politics";
  corpus.twin_farm_id = "twin-farm";

  // Unique names for the 48 regular entities.
  std::vector<std::string> names;
  std::set<std::string> used = {"david davis"};
  while (names.size() < 48) {
    std::string name = kFirstNames[r.uniform_index(kFirstNames.size())] + " " +
                       kLastNames[r.uniform_index(kLastNames.size())];
    if (used.insert(name).second) names.push_back(name);
  }

  struct spec_row {
    std::string id;
    std::string name;
    int topic;
  };
  std::vector<spec_row> rows;
  rows.push_back({corpus.twin_politics_id, "david davis", corpus.politics_topic});
  rows.push_back({corpus.twin_farm_id, "david davis", corpus.farm_topic});
  for (std::size_t i = 0; i < names.size(); ++i) {
    rows.push_back({"e" + std::to_string(i), names[i],
                    static_cast<int>(i % kTopics.size())});
  }

  std::vector<int> topic_of;
  for (const spec_row& row : rows) {
    entity e;
    e.id = row.id;
    e.name = row.name;
    e.description =
        sample_words(kTopics[static_cast<std::size_t>(row.topic)], 6, r);
    corpus.kb.add(std::move(e));
    topic_of.push_back(row.topic);
  }

  // 50 positives: variant name, same-topic context. 50 negatives: exact
  // name, context from a different topic.
  for (std::size_t i = 0; i < corpus.kb.size(); ++i) {
    const entity& e = corpus.kb.entries()[i];
    const int topic = topic_of[i];

    mention pos;
    pos.doc_id = "pos" + std::to_string(i);
    pos.text = name_variant(e.name, r);
    pos.context = sample_words(kTopics[static_cast<std::size_t>(topic)], 5, r);
    pos.gold_id = e.id;
    corpus.pairs.push_back({corpus.mentions.size(), e.id, 1,
                            pair_tier::synthetic});
    corpus.mentions.push_back(std::move(pos));

    int other = (topic + 1 + static_cast<int>(r.uniform_index(
                                 kTopics.size() - 1))) %
                static_cast<int>(kTopics.size());
    mention neg;
    neg.doc_id = "neg" + std::to_string(i);
    neg.text = e.name;
    neg.context = sample_words(kTopics[static_cast<std::size_t>(other)], 5, r);
    corpus.pairs.push_back({corpus.mentions.size(), e.id, 0,
                            pair_tier::synthetic});
    corpus.mentions.push_back(std::move(neg));
  }
  return corpus;
}

mention make_twin_probe(const linking_corpus& corpus, std::uint64_t seed) {
  rng r(seed);
  mention probe;
  probe.doc_id = "probe";
  probe.text = "david davis";
  probe.context = sample_words(
      kTopics[static_cast<std::size_t>(corpus.politics_topic)], 5, r);
  return probe;
}

std::string random_name(rng& r, int min_len, int max_len, int max_words) {
  const int words = 1 + static_cast<int>(r.uniform_index(
                            static_cast<std::size_t>(max_words)));
  std::string out;
  for (int w = 0; w < words; ++w) {
    const int len =
        min_len + static_cast<int>(r.uniform_index(
                      static_cast<std::size_t>(max_len - min_len + 1)));
    if (!out.empty()) out += ' ';
    for (int i = 0; i < len; ++i) {
      out += static_cast<char>('a' + r.uniform_index(26));
    }
  }
  return out;
}

}  // namespace elink::testsupport
