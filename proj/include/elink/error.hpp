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

#include <stdexcept>
#include <string>

namespace elink {

// Every failure the library reports carries one of these codes so callers
// (and tests) can react to the condition instead of parsing messages.
enum class errc {
  duplicate_id,
  malformed_record,
  empty_name,
  empty_mention_text,
  empty_word,
  bad_header,
  dim_mismatch,
  duplicate_token,
  non_finite_value,
  both_empty,
  shape_mismatch,
  graph_not_recorded,
  non_finite_update,
  no_eligible_entities,
  no_positives,
  single_class_dataset,
  too_small,
  empty_input,
  single_class,
  missing_key,
  io_error,
  bad_version,
  bad_config,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace elink
