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
//
// Brute-force reference implementations, kept independent of the library
// code paths they check. Same final arithmetic expressions, different
// computation routes.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elink::oracle {

// Plain recursive edit distance with memoization.
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::size_t best = self(self, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, self(self, i + 1, j) + 1);
    best = std::min(best, self(self, i, j + 1) + 1);
    memo.emplace(key, best);
    return best;
  };
  return rec(rec, 0, 0);
}

inline double levenshtein_sim(std::string_view a, std::string_view b) {
  if (a == b) return 1.0;
  std::size_t longest = std::max(a.size(), b.size());
  return 1.0 - static_cast<double>(edit_distance(a, b)) /
                   static_cast<double>(longest);
}

// Direct transcription of the Jaro definition.
inline double jaro_sim(std::string_view a, std::string_view b) {
  if (a == b) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::vector<bool> used_b(b.size(), false);
  std::vector<char> matched_a;
  std::vector<std::size_t> matched_b_positions;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used_b[j] || a[i] != b[j]) continue;
      // |i - j| <= window, avoiding unsigned underflow.
      if (i + window < j || j + window < i) continue;
      used_b[j] = true;
      matched_a.push_back(a[i]);
      matched_b_positions.push_back(j);
      break;
    }
  }
  if (matched_a.empty()) return 0.0;

  std::vector<std::size_t> sorted_positions = matched_b_positions;
  std::sort(sorted_positions.begin(), sorted_positions.end());
  std::size_t mismatched = 0;
  for (std::size_t k = 0; k < matched_a.size(); ++k) {
    if (matched_a[k] != b[sorted_positions[k]]) ++mismatched;
  }

  const double m = static_cast<double>(matched_a.size());
  const double t = static_cast<double>(mismatched) / 2.0;
  return (m / static_cast<double>(a.size()) +
          m / static_cast<double>(b.size()) + (m - t) / m) /
         3.0;
}

// Bigram counting through an ordered map of two-character substrings.
inline double cosine_sim(std::string_view a, std::string_view b) {
  if (a == b) return 1.0;
  if (a.size() < 2 || b.size() < 2) return 0.0;
  auto count = [](std::string_view s) {
    std::map<std::string, long long> m;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      ++m[std::string(s.substr(i, 2))];
    }
    return m;
  };
  const auto ca = count(a);
  const auto cb = count(b);
  long long dot = 0;
  long long na = 0;
  long long nb = 0;
  for (const auto& [k, c] : ca) na += c * c;
  for (const auto& [k, c] : cb) nb += c * c;
  for (const auto& [k, c] : ca) {
    auto it = cb.find(k);
    if (it != cb.end()) dot += c * it->second;
  }
  if (dot == 0) return 0.0;
  return static_cast<double>(dot) / (std::sqrt(static_cast<double>(na)) *
                                     std::sqrt(static_cast<double>(nb)));
}

inline double fuzzy_average(std::string_view a, std::string_view b) {
  return (cosine_sim(a, b) + levenshtein_sim(a, b) + jaro_sim(a, b)) / 3.0;
}

// O(P*N) pairwise AUC with ties counted one half.
inline double roc_auc(const std::vector<std::pair<double, bool>>& scored) {
  double wins = 0.0;
  long long pairs = 0;
  for (const auto& [sp, lp] : scored) {
    if (!lp) continue;
    for (const auto& [sn, ln] : scored) {
      if (ln) continue;
      ++pairs;
      if (sp > sn) wins += 1.0;
      else if (sp == sn) wins += 0.5;
    }
  }
  return wins / static_cast<double>(pairs);
}

}  // namespace elink::oracle
