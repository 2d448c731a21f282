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

#include "elink/embedding.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "elink/core.hpp"
#include "elink/error.hpp"

namespace elink {

namespace {

double parse_double(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + token.size()) {
    fail(errc::malformed_record,
         "line " + std::to_string(line_no) + ": bad number \"" + token + "\"");
  }
  if (!std::isfinite(v)) {
    fail(errc::non_finite_value, "line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

void word_vectors::insert(const std::string& token,
                          std::vector<double> values) {
  std::string key = normalize(token);
  if (key.empty()) fail(errc::malformed_record, "empty token");
  if (static_cast<int>(values.size()) != dim_) {
    fail(errc::dim_mismatch, "token " + key + ": got " +
                                 std::to_string(values.size()) + ", want " +
                                 std::to_string(dim_));
  }
  for (double v : values) {
    if (!std::isfinite(v)) fail(errc::non_finite_value, "token " + key);
  }
  if (index_.count(key)) fail(errc::duplicate_token, key);
  index_.emplace(key, entries_.size());
  entries_.emplace_back(std::move(key), std::move(values));
}

const std::vector<double>* word_vectors::find(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

word_vectors::lookup_result word_vectors::lookup(
    const std::string& token) const {
  if (const std::vector<double>* v = find(token)) return {*v, true};
  return {std::vector<double>(static_cast<std::size_t>(dim_), 0.0), false};
}

std::vector<double> word_vectors::mean_pool(
    const std::vector<std::string>& tokens) const {
  std::vector<double> sum(static_cast<std::size_t>(dim_), 0.0);
  std::size_t found = 0;
  for (const std::string& token : tokens) {
    if (const std::vector<double>* v = find(token)) {
      for (int i = 0; i < dim_; ++i) sum[i] += (*v)[i];
      ++found;
    }
  }
  if (found > 0) {
    for (double& s : sum) s /= static_cast<double>(found);
  }
  return sum;
}

word_vectors load_word_vectors(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail(errc::bad_header, "empty stream");

  std::istringstream hs(header);
  long long count = -1;
  int dim = -1;
  std::string extra;
  if (!(hs >> count >> dim) || (hs >> extra) || count < 0 || dim <= 0) {
    fail(errc::bad_header, "expected \"count dim\", got \"" + header + "\"");
  }

  word_vectors wv(dim);
  std::string line;
  for (long long n = 0; n < count; ++n) {
    if (!std::getline(in, line)) {
      fail(errc::malformed_record,
           "line " + std::to_string(n + 2) + ": unexpected end of stream");
    }
    const std::size_t line_no = static_cast<std::size_t>(n) + 2;
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token)) {
      fail(errc::malformed_record, "line " + std::to_string(line_no));
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(dim));
    std::string field;
    while (ls >> field) values.push_back(parse_double(field, line_no));
    if (static_cast<int>(values.size()) != dim) {
      fail(errc::dim_mismatch, "line " + std::to_string(line_no) + ": got " +
                                   std::to_string(values.size()) + ", want " +
                                   std::to_string(dim));
    }
    wv.insert(token, std::move(values));
  }
  return wv;
}

word_vectors load_word_vectors_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  return load_word_vectors(in);
}

void write_word_vectors(const word_vectors& wv, std::ostream& out) {
  out << wv.size() << ' ' << wv.dim() << '\n';
  char buf[64];
  for (const auto& [token, values] : wv.entries()) {
    out << token;
    for (double v : values) {
      std::snprintf(buf, sizeof(buf), "%.9g", v);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

void write_word_vectors_file(const word_vectors& wv, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path);
  write_word_vectors(wv, out);
}

}  // namespace elink
