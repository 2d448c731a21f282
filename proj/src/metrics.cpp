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

#include "elink/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "elink/error.hpp"

namespace elink {

confusion_counts confusion(
    const std::vector<std::pair<bool, bool>>& decisions) {
  if (decisions.empty()) fail(errc::empty_input, "no decisions");
  confusion_counts c;
  for (const auto& [predicted, actual] : decisions) {
    if (predicted && actual) ++c.tp;
    else if (predicted && !actual) ++c.fp;
    else if (!predicted && actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

double f1_from_pr(double precision, double recall) {
  return 2.0 * precision * recall / (precision + recall);
}

prf_result prf(const confusion_counts& c) {
  prf_result r;
  r.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
  if (c.tp + c.fp > 0) {
    r.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  }
  if (c.tp + c.fn > 0) {
    r.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  }
  if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0) {
    r.f1 = f1_from_pr(*r.precision, *r.recall);
  }
  return r;
}

double roc_auc(const std::vector<std::pair<double, bool>>& scored) {
  std::size_t n_pos = 0;
  for (const auto& [score, actual] : scored) n_pos += actual ? 1 : 0;
  const std::size_t n_neg = scored.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    fail(errc::single_class, "need both classes for AUC");
  }

  std::vector<std::size_t> order(scored.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scored[a].first < scored[b].first;
  });

  // Rank sum of the positives with average ranks over tied scores.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() &&
           scored[order[j]].first == scored[order[i]].first) {
      ++j;
    }
    // 1-based ranks i+1 .. j share the average (i + j + 1) / 2.
    const double avg_rank = (static_cast<double>(i) + static_cast<double>(j) + 1.0) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (scored[order[k]].second) rank_sum_pos += avg_rank;
    }
    i = j;
  }

  const double np = static_cast<double>(n_pos);
  const double nn = static_cast<double>(n_neg);
  const double u = rank_sum_pos - np * (np + 1.0) / 2.0;
  return u / (np * nn);
}

}  // namespace elink
