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
#include "semg/rate_solvers.hpp"

namespace semg {

enum class ComponentKind { gaussian, table };

// One mixture component P(x|theta_j) on the shared grid. Gaussian components
// keep their (mean, sigma) and the normalized rendering in probs.
struct Component {
  ComponentKind kind = ComponentKind::table;
  double mean = 0.0;
  double sigma = 0.0;
  std::vector<double> probs;

  static Component gaussian(double mean, double sigma, std::span<const double> grid);
  static Component table(std::vector<double> probs);
};

struct MixtureModel {
  LabelDistribution weights;
  std::vector<Component> components;

  // P_theta(x) = sum_j P(y_j) P(x|theta_j).
  std::vector<double> density() const;
  std::size_t grid_size() const;
  void validate(std::size_t grid_size) const;
};

// Responsibilities P(y_j|x) = P(y_j) P(x|theta_j) / P_theta(x). Rows of grid
// points with zero density and zero data mass are set to the weights.
ShannonChannel em_e_step(const Source& data, const MixtureModel& model);
ShannonChannel em_e_step(const Source& data, const LabelDistribution& weights,
                         const std::vector<std::vector<double>>& likelihoods);

LabelDistribution em_m1_step(const Source& data, const ShannonChannel& responsibilities);

// P(x|theta_j) = P(x) P(y_j|x) / P(y_j); Gaussian components are refit to the
// mean and standard deviation of that distribution and re-rendered.
std::vector<Component> em_m2_step(const Source& data, const ShannonChannel& responsibilities,
                                  const LabelDistribution& new_weights,
                                  const std::vector<Component>& current,
                                  std::span<const double> grid);

struct EnmTraceRecord {
  int iteration = 0;
  double R = 0.0;               // sum P(x) P(y|x) log(P(y|x) / P+(y))
  double G = 0.0;               // sum P(x) P(y|x) log(P(x|theta) / P(x))
  double Rpp = 0.0;             // sum P(x) P(y|x) log(P(x|theta) / P_theta(x))
  double kl_data_model = 0.0;   // KL(P || P_theta)
  double kl_labels = 0.0;       // KL(P+_Y || P_Y)
  double Q = 0.0;               // -H(X, Y_theta)
  double Fprime = 0.0;          // H(Y) + Q
  double F = 0.0;               // H(X|Y_theta) of the model, -sum_j P(y_j) sum_x P(x|theta_j) log P(x|theta_j)
  std::vector<double> weights;  // weights at the time of the record
};

struct EnmOptions {
  int n_inner = 3;  // n_inner = 1 is plain EM
  double tol = 1e-4;
  int max_outer = 1000;
};

struct EnmResult {
  MixtureModel model;
  std::vector<EnmTraceRecord> trace;
  int outer_iterations = 0;
  bool converged = false;
};

// Outer loop: record diagnostics after an E-step and stop once
// KL(P || P_theta) < tol; otherwise repeat (E, M1) n_inner times and update
// the components from the last responsibilities.
EnmResult enm_fit(const Source& data, std::span<const double> grid, const MixtureModel& init,
                  const EnmOptions& options = {});

enum class ConstraintForm {
  likelihood,  // columns are P(x|theta_j)
  truth,       // columns are T(theta_j|x)
};

struct SvbOptions {
  double s = 1.0;
  SolverOptions solver{1e-10, 20000};
};

struct SvbResult {
  LabelDistribution label_dist;
  ShannonChannel channel;
  double F = 0.0;                   // H(X|Y_theta) + KL(P+_Y || P_Y)
  double posterior_entropy = 0.0;   // H(X|Y_theta)
  double kl_labels = 0.0;           // KL(P+_Y || P_Y) of the last step
  double R = 0.0;
  double G = 0.0;
  int iterations = 0;
  bool converged = false;
};

// constraints has one column per latent label over the data grid.
SvbResult svb_solve(const Source& data, const Matrix& constraints, ConstraintForm form,
                    const SvbOptions& options = {});
SvbResult svb_solve(const Source& data, const Matrix& constraints, ConstraintForm form,
                    const LabelDistribution& init, const SvbOptions& options = {});

}  // namespace semg
