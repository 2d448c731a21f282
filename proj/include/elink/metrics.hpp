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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace elink {

struct confusion_counts {
  long long tp = 0;
  long long fp = 0;
  long long tn = 0;
  long long fn = 0;

  long long total() const { return tp + fp + tn + fn; }
};

// decisions are (predicted, actual). Throws errc::empty_input.
confusion_counts confusion(
    const std::vector<std::pair<bool, bool>>& decisions);

// Precision/recall/f1 are absent (not zero) when their denominator is zero.
struct prf_result {
  double accuracy = 0.0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

prf_result prf(const confusion_counts& counts);

// 2PR/(P+R); the arithmetic step prf uses.
double f1_from_pr(double precision, double recall);

// Probability a random positive outscores a random negative, ties counted
// one half (rank-sum form, exact). scored is (score, actual). Throws
// errc::single_class without both classes.
double roc_auc(const std::vector<std::pair<double, bool>>& scored);

}  // namespace elink
