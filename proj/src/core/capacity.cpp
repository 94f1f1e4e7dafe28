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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/numeric.hpp"
#include "semg/rate_solvers.hpp"

namespace semg {

namespace {

struct Evaluator {
  const SemanticChannel& sem;
  const CapacityOptions& options;
  int count = 0;

  // Semantic MI reached at the large slope, or -inf for sources the truth
  // functions cannot describe.
  double operator()(const std::vector<double>& p, RGPoint* out = nullptr) {
    ++count;
    try {
      RGPoint pt = solve_rg_point(Source(p), sem, options.s, options.solver);
      const double g = pt.G;
      if (out) *out = std::move(pt);
      return g;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::degenerate_row || e.code() == ErrorCode::all_zero_overlap)
        return -std::numeric_limits<double>::infinity();
      throw;
    }
  }
};

std::vector<double> renormalized(std::vector<double> p) {
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return p;
}

}  // namespace

CapacityResult semantic_channel_capacity(const SemanticChannel& sem,
                                         const CapacityOptions& options) {
  detail::require_arg(options.initial_step > 0.0 && options.min_step > 0.0,
                      "capacity search steps must be positive");
  const std::size_t n = sem.rows(), m = sem.cols();
  CapacityResult result;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (sem(i, j) > sem(best, j)) best = i;
    result.peaks.push_back(best);
  }
  std::vector<std::size_t> distinct = result.peaks;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  result.duplicate_peak = distinct.size() < m;

  std::vector<double> p(n, 0.0);
  for (std::size_t i : distinct) p[i] = 1.0 / static_cast<double>(distinct.size());

  Evaluator eval{sem, options};
  double best = eval(p);
  double step = options.initial_step;
  while (step >= options.min_step) {
    for (int sweep = 0; sweep < options.max_sweeps_per_step; ++sweep) {
      bool improved = false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b || p[a] <= 0.0) continue;
          std::vector<double> trial = p;
          const double amount = std::min(step, trial[a]);
          trial[a] -= amount;
          trial[b] += amount;
          if (trial[a] < 1e-15) trial[a] = 0.0;
          trial = renormalized(std::move(trial));
          const double g = eval(trial);
          if (g > best + 1e-13) {
            best = g;
            p = std::move(trial);
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    step *= 0.5;
  }

  result.source = Source(p);
  result.capacity = eval(p, &result.point);
  result.evaluations = eval.count;
  return result;
}

}  // namespace semg
