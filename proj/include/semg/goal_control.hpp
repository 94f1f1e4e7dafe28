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

#include "semg/prob_core.hpp"
#include "semg/rate_solvers.hpp"

namespace semg {

struct ControlProblem {
  Source baseline;          // P(x) without control
  SemanticChannel targets;  // one target truth function per action
  double s = 1.0;
};

struct ControlSolution {
  LabelDistribution action_dist;               // P(a)
  ShannonChannel action_channel;               // P(a|x)
  std::vector<std::vector<double>> result_dists;  // P(x|a_j)
  double R = 0.0;
  double G = 0.0;
  int iterations = 0;
  bool converged = false;
};

// sum_i P(x_i|a_j) log(T(theta_j|x_i) / T(theta_j)), T(theta_j) from the baseline.
double goal_info(std::span<const double> result, const Source& baseline,
                 std::span<const double> target);

// sum_j P(a_j) goal_info(P(x|a_j)).
double multi_goal_info(const ControlSolution& solution, const Source& baseline,
                       const SemanticChannel& targets);

// Minimum I(X;A) - s I(X;A/theta) by the same alternation as the rate
// solver, with actions as labels. Starts from the uniform action distribution
// unless init is given.
ControlSolution solve_control(const ControlProblem& problem, const SolverOptions& options = {});
ControlSolution solve_control(const ControlProblem& problem, const LabelDistribution& init,
                              const SolverOptions& options = {});

// goal_info(next) - goal_info(prev).
double rl_reward(std::span<const double> prev, std::span<const double> next,
                 const Source& baseline, std::span<const double> target);

struct NormalProjection {
  std::vector<std::vector<double>> result_dists;  // moment-matched Gaussians on the support
  double R = 0.0;
  double G = 0.0;
  double delta_R = 0.0;  // projected minus optimal
  double delta_G = 0.0;
  double efficiency = 0.0;        // G / R of the projection
  double delta_efficiency = 0.0;  // projected minus optimal
};

// Replaces every P(x|a_j) by a discretized Gaussian with the same mean and
// standard deviation (actions keep their probabilities) and re-evaluates R, G.
NormalProjection project_to_normal(const ControlSolution& solution, const ControlProblem& problem,
                                   std::span<const double> support_values);

}  // namespace semg
