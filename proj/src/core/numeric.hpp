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

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "semg/config.hpp"
#include "semg/errors.hpp"
#include "semg/prob_core.hpp"

namespace semg::detail {

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

inline void require_arg(bool condition, const std::string& message) {
  require(condition, ErrorCode::invalid_argument, message);
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  require_arg(a == b, std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

inline bool negligible(double p) noexcept { return p < kZeroProbability; }

// Natural log with log(0) = -infinity.
inline double safe_log(double x) noexcept {
  return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

// log sum exp over finite and -inf entries; -inf when all are -inf.
inline double log_sum_exp(std::span<const double> v) noexcept {
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : v) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - mx);
  return mx + std::log(acc);
}

void check_probability_vector(std::span<const double> p, const char* what);

// Nonnegative finite entries with a positive sum.
void check_weights(std::span<const double> w, const char* what);

std::vector<double> normalized(std::span<const double> w);

// Column j of a matrix is P(x|y_j) given the joint-shaped weights.
std::vector<double> posterior_column(const Source& source, const ShannonChannel& channel,
                                     std::size_t j, double& label_prob);

}  // namespace semg::detail
