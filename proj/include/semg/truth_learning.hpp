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

#include <cstddef>
#include <span>
#include <vector>

#include "semg/prob_core.hpp"

namespace semg {

// Column j = P(y_j|x) / max_x P(y_j|x).
SemanticChannel lbi_direct(const Source& source, const ShannonChannel& channel);

enum class TruthFamily {
  gaussian,   // (center, sigma)
  trapezoid,  // (left foot, left shoulder, right shoulder, right foot)
};

std::size_t family_arity(TruthFamily family) noexcept;
const char* family_name(TruthFamily family) noexcept;

// Evaluates a truth function of the family on the support values.
std::vector<double> evaluate_family(TruthFamily family, std::span<const double> params,
                                    std::span<const double> support_values);

// Finite list of parameter points searched exhaustively.
struct ParameterGrid {
  TruthFamily family = TruthFamily::gaussian;
  std::vector<std::vector<double>> points;

  static ParameterGrid gaussian(std::span<const double> centers, std::span<const double> sigmas);
  // All ordered knot quadruples lf <= ls <= rs <= rf drawn from the knots.
  static ParameterGrid trapezoid(std::span<const double> knots);
};

struct FitResult {
  std::vector<double> params;
  double score = 0.0;      // semantic KL information of the winner
  std::size_t index = 0;   // position in the grid
};

// argmax over the grid of semantic_kl_info(cond, source, T_params). Lowest
// index wins ties. Points whose truth function has no overlap with the
// source are skipped.
FitResult lbi_parametric(std::span<const double> cond, const Source& source,
                         std::span<const double> support_values, const ParameterGrid& grid);

// Fit from one column of P(y_j|x) with the instances taken as equiprobable.
FitResult multilabel_equal_prior(std::span<const double> channel_column,
                                 std::span<const double> support_values,
                                 const ParameterGrid& grid);

enum class ClassifyCriterion {
  max_information,  // argmax_j log(T(theta_j|x) / T(theta_j))
  min_distortion,   // argmax_j T(theta_j|x)
};

// Lowest index wins ties.
std::size_t classify_max_info(std::span<const double> truth_row,
                              std::span<const double> logical_probs,
                              ClassifyCriterion criterion = ClassifyCriterion::max_information);

}  // namespace semg
