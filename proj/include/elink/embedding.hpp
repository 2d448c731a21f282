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

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace elink {

// Pretrained word vectors served from a word2vec-style text file. Immutable
// after load; lookups are safe to run concurrently.
class word_vectors {
 public:
  word_vectors() = default;
  explicit word_vectors(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  // Token is lowercased before storing. Throws errc::dim_mismatch,
  // errc::duplicate_token, errc::non_finite_value.
  void insert(const std::string& token, std::vector<double> values);

  // nullptr when absent.
  const std::vector<double>* find(const std::string& token) const;

  struct lookup_result {
    std::vector<double> values;
    bool found = false;
  };

  // Stored vector, or a zero vector of length dim with found=false.
  lookup_result lookup(const std::string& token) const;

  // Mean over the vectors of FOUND tokens only; zero vector when none found.
  std::vector<double> mean_pool(const std::vector<std::string>& tokens) const;

  // Insertion order; drives deterministic serialization.
  const std::vector<std::pair<std::string, std::vector<double>>>& entries()
      const {
    return entries_;
  }

 private:
  int dim_ = 0;
  std::vector<std::pair<std::string, std::vector<double>>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Text format: header line "count dim", then one "token v1 ... v_dim" line
// per token, ASCII spaces, \n line endings.
word_vectors load_word_vectors(std::istream& in);
word_vectors load_word_vectors_file(const std::string& path);

// Writes the same format with 9 significant digits per component.
void write_word_vectors(const word_vectors& wv, std::ostream& out);
void write_word_vectors_file(const word_vectors& wv, const std::string& path);

}  // namespace elink
