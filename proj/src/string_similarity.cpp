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

#include "elink/string_similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "elink/error.hpp"

namespace elink {

namespace {

void check_not_both_empty(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) {
    fail(errc::both_empty, "similarity of two empty strings");
  }
}

// Sorted (bigram, count) pairs; keys are the two bytes packed into 16 bits.
std::vector<std::pair<std::uint16_t, int>> bigram_counts(std::string_view s) {
  std::vector<std::uint16_t> keys;
  if (s.size() >= 2) {
    keys.reserve(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      keys.push_back(static_cast<std::uint16_t>(
          (static_cast<unsigned char>(s[i]) << 8) |
          static_cast<unsigned char>(s[i + 1])));
    }
    std::sort(keys.begin(), keys.end());
  }
  std::vector<std::pair<std::uint16_t, int>> counts;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    counts.emplace_back(keys[i], static_cast<int>(j - i));
    i = j;
  }
  return counts;
}

}  // namespace

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();

  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;

  for (std::size_t i = 0; i < a.size(); ++i) {
    curr[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t cost = a[i] == b[j] ? 0 : 1;
      curr[j + 1] =
          std::min({curr[j] + 1, prev[j + 1] + 1, prev[j] + cost});
    }
    prev.swap(curr);
  }
  return prev[b.size()];
}

double levenshtein_sim(std::string_view a, std::string_view b) {
  check_not_both_empty(a, b);
  if (a == b) return 1.0;
  std::size_t longest = std::max(a.size(), b.size());
  return 1.0 - static_cast<double>(edit_distance(a, b)) /
                   static_cast<double>(longest);
}

double jaro_sim(std::string_view a, std::string_view b) {
  check_not_both_empty(a, b);
  if (a == b) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::vector<bool> a_matched(a.size(), false);
  std::vector<bool> b_matched(b.size(), false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t lo = i > window ? i - window : 0;
    std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!b_matched[j] && a[i] == b[j]) {
        a_matched[i] = true;
        b_matched[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;

  std::size_t mismatched_positions = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (a[i] != b[j]) ++mismatched_positions;
    ++j;
  }

  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(mismatched_positions) / 2.0;
  return (m / static_cast<double>(a.size()) +
          m / static_cast<double>(b.size()) + (m - t) / m) /
         3.0;
}

double cosine_sim(std::string_view a, std::string_view b) {
  check_not_both_empty(a, b);
  if (a == b) return 1.0;
  if (a.size() < 2 || b.size() < 2) return 0.0;

  const auto ca = bigram_counts(a);
  const auto cb = bigram_counts(b);

  long long dot = 0;
  long long norm_a = 0;
  long long norm_b = 0;
  for (const auto& [key, count] : ca) norm_a += 1LL * count * count;
  for (const auto& [key, count] : cb) norm_b += 1LL * count * count;

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ca.size() && j < cb.size()) {
    if (ca[i].first == cb[j].first) {
      dot += 1LL * ca[i].second * cb[j].second;
      ++i;
      ++j;
    } else if (ca[i].first < cb[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  if (dot == 0) return 0.0;
  return static_cast<double>(dot) /
         (std::sqrt(static_cast<double>(norm_a)) *
          std::sqrt(static_cast<double>(norm_b)));
}

fuzzy_score fuzzy_match(std::string_view a, std::string_view b) {
  check_not_both_empty(a, b);
  fuzzy_score s;
  s.cosine = cosine_sim(a, b);
  s.levenshtein = levenshtein_sim(a, b);
  s.jaro = jaro_sim(a, b);
  s.average = (s.cosine + s.levenshtein + s.jaro) / 3.0;
  return s;
}

}  // namespace elink
