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

#include "semg/goal_control.hpp"

#include <cmath>

#include "core/mid_engine.hpp"
#include "core/numeric.hpp"
#include "semg/info_measures.hpp"

namespace semg {

using detail::negligible;

double goal_info(std::span<const double> result, const Source& baseline,
                 std::span<const double> target) {
  return semantic_kl_info(result, baseline, target);
}

double multi_goal_info(const ControlSolution& solution, const Source& baseline,
                       const SemanticChannel& targets) {
  detail::require_same_size(solution.result_dists.size(), targets.cols(), "multi_goal_info");
  double total = 0.0;
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    const double pa = solution.action_dist[j];
    if (negligible(pa)) continue;
    total += pa * goal_info(solution.result_dists[j], baseline, targets.column(j));
  }
  return total;
}

namespace {

std::vector<std::vector<double>> result_distributions(const Source& baseline,
                                                      const ShannonChannel& channel) {
  std::vector<std::vector<double>> out(channel.cols());
  for (std::size_t j = 0; j < channel.cols(); ++j) {
    double pa = 0.0;
    out[j] = detail::posterior_column(baseline, channel, j, pa);
  }
  return out;
}

}  // namespace

ControlSolution solve_control(const ControlProblem& problem, const LabelDistribution& init,
                              const SolverOptions& options) {
  RGPoint pt = solve_rg_point(problem.baseline, problem.targets, problem.s, init, options);
  ControlSolution sol;
  sol.result_dists = result_distributions(problem.baseline, pt.channel);
  sol.action_dist = std::move(pt.label_dist);
  sol.action_channel = std::move(pt.channel);
  sol.R = pt.R;
  sol.G = pt.G;
  sol.iterations = pt.iterations;
  sol.converged = pt.converged;
  return sol;
}

ControlSolution solve_control(const ControlProblem& problem, const SolverOptions& options) {
  return solve_control(problem, LabelDistribution::uniform(problem.targets.cols()), options);
}

double rl_reward(std::span<const double> prev, std::span<const double> next,
                 const Source& baseline, std::span<const double> target) {
  detail::require_same_size(prev.size(), next.size(), "rl_reward");
  detail::require_same_size(prev.size(), baseline.size(), "rl_reward");
  const double tj = logical_probability(baseline, target);
  detail::require(tj > 0.0, ErrorCode::all_zero_overlap,
                  "target has no overlap with the baseline");
  const double log_tj = std::log(tj);
  double reward = 0.0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    const double d = (negligible(next[i]) ? 0.0 : next[i]) - (negligible(prev[i]) ? 0.0 : prev[i]);
    if (d == 0.0) continue;
    reward += d * (detail::safe_log(target[i]) - log_tj);
  }
  return to_units(reward);
}

NormalProjection project_to_normal(const ControlSolution& solution, const ControlProblem& problem,
                                   std::span<const double> support_values) {
  const std::size_t n = problem.baseline.size(), m = problem.targets.cols();
  detail::require_same_size(support_values.size(), n, "project_to_normal support");
  detail::require_same_size(solution.result_dists.size(), m, "project_to_normal actions");

  NormalProjection out;
  out.result_dists.assign(m, std::vector<double>(n, 0.0));
  std::vector<double> mixture(n, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const double pa = solution.action_dist[j];
    if (negligible(pa)) continue;
    const auto& r = solution.result_dists[j];
    double mean = 0.0, var = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += r[i] * support_values[i];
    for (std::size_t i = 0; i < n; ++i)
      var += r[i] * (support_values[i] - mean) * (support_values[i] - mean);
    auto g = gaussian_truth(support_values, mean, std::sqrt(var));
    const auto normal = detail::normalized(g);
    out.result_dists[j] = normal;
    for (std::size_t i = 0; i < n; ++i) mixture[i] += pa * normal[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double pa = solution.action_dist[j];
    if (negligible(pa)) continue;
    out.R += pa * kl_divergence(out.result_dists[j], mixture);
    out.G += pa * goal_info(out.result_dists[j], problem.baseline, problem.targets.column(j));
  }
  out.delta_R = out.R - solution.R;
  out.delta_G = out.G - solution.G;
  out.efficiency = out.R > 0.0 ? out.G / out.R : 0.0;
  const double base_eff = solution.R > 0.0 ? solution.G / solution.R : 0.0;
  out.delta_efficiency = out.efficiency - base_eff;
  return out;
}

}  // namespace semg
