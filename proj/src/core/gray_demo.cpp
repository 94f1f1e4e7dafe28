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

#include <cmath>

#include "core/numeric.hpp"
#include "semg/info_measures.hpp"
#include "semg/rate_solvers.hpp"

namespace semg {

namespace {

void validate(const GrayDemoConfig& c) {
  detail::require_arg(c.n_labels >= 2, "gray demo: at least two labels are required");
  detail::require_arg(c.levels >= c.n_labels, "gray demo: levels must be >= labels");
  detail::require_arg(c.beta >= 0.0 && std::isfinite(c.beta), "gray demo: beta must be >= 0");
  detail::require_arg(std::isfinite(c.sigma0), "gray demo: sigma0 must be finite");
  detail::require_arg(std::isfinite(c.s), "gray demo: s must be finite");
}

// Centers equally spaced in ln(1 + beta x / L), so spacing grows with x.
std::vector<double> perceptual_centers(int levels, int n, double beta) {
  const double L = levels;
  const double top = L - 1.0;
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) {
    const double frac = static_cast<double>(j) / (n - 1);
    if (beta == 0.0) {
      out[j] = frac * top;
    } else {
      const double u = frac * std::log1p(beta * top / L);
      out[j] = std::expm1(u) * L / beta;
    }
  }
  return out;
}

}  // namespace

GrayDemoReport gray_truth_functions(const GrayDemoConfig& config) {
  validate(config);
  const int L = config.levels, n = config.n_labels;
  const auto values = index_values(static_cast<std::size_t>(L));
  GrayDemoReport report;
  report.source = Source::uniform(values.size());
  Matrix t(values.size(), static_cast<std::size_t>(n), 0.0);
  if (config.family == GrayFamily::crisp) {
    for (int j = 0; j < n; ++j) {
      const int lo = static_cast<int>(static_cast<long long>(j) * L / n);
      const int hi = static_cast<int>(static_cast<long long>(j + 1) * L / n);
      for (int i = lo; i < hi; ++i) t(i, j) = 1.0;
      report.centers.push_back(0.5 * (lo + hi - 1));
      report.sigmas.push_back(0.5 * (hi - lo));
    }
  } else {
    const double sigma0 = config.sigma0 > 0.0 ? config.sigma0 : L / 24.0;
    report.centers = perceptual_centers(L, n, config.beta);
    for (int j = 0; j < n; ++j) {
      const double c = report.centers[j];
      const double sigma = sigma0 * (1.0 + config.beta * c / L);
      report.sigmas.push_back(sigma);
      t.set_column(j, gaussian_truth(values, c, sigma));
    }
  }
  report.sem = SemanticChannel(std::move(t));
  return report;
}

GrayDemoReport gray_compression_demo(const GrayDemoConfig& config) {
  GrayDemoReport report = gray_truth_functions(config);
  const auto& source = report.source;
  const auto& sem = report.sem;
  auto record = [&](int it, const ShannonChannel& channel, std::span<const double>) {
    report.trace.push_back({it, shannon_mi(source, channel), semantic_mi(source, channel, sem).semantic_mi});
  };
  report.point = solve_rg_point(source, sem, config.s, LabelDistribution::uniform(sem.cols()),
                                config.solver, record);
  if (config.with_limit) report.limit = solve_rg_point(source, sem, kInfiniteSlope, config.solver);
  return report;
}

}  // namespace semg
