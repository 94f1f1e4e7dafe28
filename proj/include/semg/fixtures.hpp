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

#include <span>
#include <vector>

#include "semg/goal_control.hpp"
#include "semg/max_mi_classify.hpp"
#include "semg/mixture_latent.hpp"
#include "semg/prob_core.hpp"
#include "semg/rate_solvers.hpp"

// Built-in experiment setups. The parameter values are reconstructions chosen
// to exhibit the documented behavior; see the README for each setup.
namespace semg::fixtures {

// Normalized discretized Gaussian on the support values.
std::vector<double> discrete_gaussian(std::span<const double> values, double mean, double sigma);

// Binary source (0.6, 0.4) sent through two noisy binary truth functions.
struct BinaryCommunication {
  Source source;
  SemanticChannel sem;
  std::vector<double> s_grid;  // left branch, right branch and the s = 200 limit
};
BinaryCommunication binary_communication();

// Two-pasture style control: a Gaussian baseline on 0..99 and two
// complementary fuzzy targets (low and high values).
struct TwoTargetControl {
  std::vector<double> values;
  ControlProblem problem;  // s left at 1
};
TwoTargetControl two_target_control();

// Two-class source with 1-D observations z; used by max-MI classification.
struct ClassificationSetup {
  ObservationModel obs;
  std::vector<double> z_values;
  Partition init;  // deliberately poor initial partition
};
// |z| = 12, P(x) = (0.8, 0.2), class means 3.5 and 7.5, sigma 2.
ClassificationSetup tiny_classification();
// |z| = 100, class means 30 and 65, sigma 10, equal class probabilities.
ClassificationSetup two_gaussian_classification();

struct MixtureSetup {
  std::vector<double> grid;
  Source data;        // exact mixture density on the grid
  MixtureModel truth;
  MixtureModel init;
};
// Grid 0..127, means (30, 70), sigma 10, weights (0.3, 0.7); start with the
// weights swapped, means (50, 90) and sigma 20.
MixtureSetup two_gaussian_mixture();
// Means (40, 85), sigma 12, weights (0.3, 0.7); start at the true means with
// sigma 5 and equal weights. The components widen while converging.
MixtureSetup narrow_start_mixture();
// Grid 0..63, means (12, 30, 48), sigmas (5, 6, 7), weights (0.2, 0.5, 0.3).
MixtureSetup three_component_mixture();

// Two overlapping Gaussian truth functions on a 6-point alphabet.
SemanticChannel overlapping_truths();
// n disjoint crisp truth functions on an n-point alphabet (identity matrix).
SemanticChannel disjoint_crisp(std::size_t n);

}  // namespace semg::fixtures
