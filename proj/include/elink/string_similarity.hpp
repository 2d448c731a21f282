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

#include <cstddef>
#include <string_view>

namespace elink {

// The three component scores plus their arithmetic mean. All in [0, 1].
struct fuzzy_score {
  double cosine = 0.0;
  double levenshtein = 0.0;
  double jaro = 0.0;
  double average = 0.0;
};

// Unit-cost insert/delete/substitute edit distance.
std::size_t edit_distance(std::string_view a, std::string_view b);

// 1 - edit_distance / max(|a|, |b|). Inputs must be normalized and not both
// empty (errc::both_empty otherwise).
double levenshtein_sim(std::string_view a, std::string_view b);

// Plain Jaro with match window floor(max(|a|,|b|)/2) - 1 (not below 0).
double jaro_sim(std::string_view a, std::string_view b);

// Cosine over character-bigram count vectors, spaces retained. Equal strings
// score 1; a string shorter than 2 characters has no bigrams and scores 0
// against anything unequal.
double cosine_sim(std::string_view a, std::string_view b);

// All three metrics and their average; the blocking and weak-labeling score.
fuzzy_score fuzzy_match(std::string_view a, std::string_view b);

}  // namespace elink
