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

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace elink {

// Seeded generator built on mt19937_64 with hand-rolled sampling so that a
// seed reproduces the same draws on every standard library. The distribution
// adapters in <random> are implementation-defined and would break the
// byte-identical reproducibility contract.
class rng {
 public:
  explicit rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased index in [0, n). Rejection sampling; n must be positive.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t excess = (max64 % n + 1) % n;
    const std::uint64_t accept_below_or_eq = max64 - excess;
    std::uint64_t x = next_u64();
    while (x > accept_below_or_eq) x = next_u64();
    return static_cast<std::size_t>(x % n);
  }

  // Fisher-Yates shuffle driven by uniform_index.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace elink
