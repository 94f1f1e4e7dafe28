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

#include "semg/fixtures.hpp"

#include <cmath>

#include "core/numeric.hpp"

namespace semg::fixtures {

std::vector<double> discrete_gaussian(std::span<const double> values, double mean, double sigma) {
  return Component::gaussian(mean, sigma, values).probs;
}

BinaryCommunication binary_communication() {
  BinaryCommunication f;
  f.source = Source({"x0", "x1"}, {0.6, 0.4});
  f.sem = SemanticChannel(Matrix::from_rows({{1.0, 0.2}, {0.2, 1.0}}));
  for (int k = -8; k <= -1; ++k) f.s_grid.push_back(0.5 * k);
  for (int k = 1; k <= 40; ++k) f.s_grid.push_back(0.25 * k);
  f.s_grid.push_back(kInfiniteSlope);
  return f;
}

TwoTargetControl two_target_control() {
  TwoTargetControl f;
  f.values = index_values(100);
  f.problem.baseline = Source(discrete_gaussian(f.values, 50.0, 20.0));
  Matrix t(100, 2);
  for (std::size_t i = 0; i < 100; ++i) {
    const double low = 1.0 / (1.0 + std::exp((f.values[i] - 50.0) / 6.0));
    t(i, 0) = low;
    t(i, 1) = 1.0 - low;
  }
  f.problem.targets = SemanticChannel(std::move(t));
  f.problem.s = 1.0;
  return f;
}

namespace {

ClassificationSetup classification(std::size_t nz, std::vector<double> class_probs,
                                   std::vector<double> means, double sigma) {
  ClassificationSetup f;
  f.z_values = index_values(nz);
  Matrix zx(class_probs.size(), nz);
  for (std::size_t i = 0; i < class_probs.size(); ++i) {
    const auto g = discrete_gaussian(f.z_values, means[i], sigma);
    for (std::size_t k = 0; k < nz; ++k) zx(i, k) = g[k];
  }
  std::vector<std::string> z_ids;
  for (std::size_t k = 0; k < nz; ++k) z_ids.push_back("z" + std::to_string(k));
  f.obs = ObservationModel(Source(std::move(class_probs)), ShannonChannel(std::move(zx)),
                           std::move(z_ids));
  return f;
}

}  // namespace

ClassificationSetup tiny_classification() {
  auto f = classification(12, {0.8, 0.2}, {3.5, 7.5}, 2.0);
  f.init.assignment.assign(12, 0);
  f.init.assignment[0] = f.init.assignment[1] = 1;
  return f;
}

ClassificationSetup two_gaussian_classification() {
  auto f = classification(100, {0.5, 0.5}, {30.0, 65.0}, 10.0);
  f.init.assignment.assign(100, 0);
  for (std::size_t k = 85; k < 100; ++k) f.init.assignment[k] = 1;
  return f;
}

namespace {

MixtureModel gaussian_mixture(const std::vector<double>& grid, std::vector<double> weights,
                              const std::vector<double>& means,
                              const std::vector<double>& sigmas) {
  MixtureModel m;
  m.weights = LabelDistribution(std::move(weights));
  for (std::size_t j = 0; j < means.size(); ++j)
    m.components.push_back(Component::gaussian(means[j], sigmas[j], grid));
  return m;
}

MixtureSetup mixture_setup(std::size_t n, MixtureModel (*truth)(const std::vector<double>&),
                           MixtureModel (*init)(const std::vector<double>&)) {
  MixtureSetup f;
  f.grid = index_values(n);
  f.truth = truth(f.grid);
  f.init = init(f.grid);
  f.data = Source(detail::normalized(f.truth.density()));
  return f;
}

}  // namespace

MixtureSetup two_gaussian_mixture() {
  return mixture_setup(
      128,
      [](const std::vector<double>& g) { return gaussian_mixture(g, {0.3, 0.7}, {30, 70}, {10, 10}); },
      [](const std::vector<double>& g) { return gaussian_mixture(g, {0.7, 0.3}, {50, 90}, {20, 20}); });
}

MixtureSetup narrow_start_mixture() {
  return mixture_setup(
      128,
      [](const std::vector<double>& g) { return gaussian_mixture(g, {0.3, 0.7}, {40, 85}, {12, 12}); },
      [](const std::vector<double>& g) { return gaussian_mixture(g, {0.5, 0.5}, {40, 85}, {5, 5}); });
}

MixtureSetup three_component_mixture() {
  return mixture_setup(
      64,
      [](const std::vector<double>& g) {
        return gaussian_mixture(g, {0.2, 0.5, 0.3}, {12, 30, 48}, {5, 6, 7});
      },
      [](const std::vector<double>& g) {
        return gaussian_mixture(g, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {12, 30, 48}, {5, 6, 7});
      });
}

SemanticChannel overlapping_truths() {
  const auto v = index_values(6);
  return SemanticChannel::from_columns({gaussian_truth(v, 1.5, 1.5), gaussian_truth(v, 3.5, 1.5)});
}

SemanticChannel disjoint_crisp(std::size_t n) {
  Matrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return SemanticChannel(std::move(m));
}

}  // namespace semg::fixtures
