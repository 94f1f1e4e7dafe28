// Copyright 2026 The semg Authors
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

namespace semg {

// Failure categories raised by the numerical core. Conditions that still
// produce a usable result (non-convergence, duplicate peaks, no betting edge,
// dropped classes, cycles) are reported through result flags instead.
enum class ErrorCode {
  invalid_argument,
  all_zero_overlap,
  domain_mismatch,
  non_positive_sigma,
  non_positive_logical_prob,
  empty_label,
  no_positive_truth,
  degenerate_row,
  zero_mixture_density,
  empty_component,
  undefined_conditional,
  unknown_figure,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semg
