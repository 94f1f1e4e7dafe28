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

namespace semg {

// All values in the configured log unit.
struct MeasureReport {
  double shannon_mi = 0.0;                  // I(X;Y)
  double semantic_mi = 0.0;                 // I(X;Y_theta)
  double semantic_entropy = 0.0;            // H(Y_theta)
  double fuzzy_entropy = 0.0;               // H(Y_theta|X), the average distortion
  double semantic_posterior_entropy = 0.0;  // H(X|Y_theta)
  double residual_kl = 0.0;                 // sum_j P(y_j) KL(P(x|y_j) || P(x|theta_j))
};

double entropy(std::span<const double> probs);

// KL(p || q); +infinity when q vanishes where p does not.
double kl_divergence(std::span<const double> p, std::span<const double> q);

double shannon_mi(const JointDistribution& joint);
double shannon_mi(const Source& source, const ShannonChannel& channel);

MeasureReport semantic_mi(const Source& source, const ShannonChannel& channel,
                          const SemanticChannel& sem);

// log(truth / logical_prob); -infinity for zero truth.
double pointwise_g(double truth_value, double logical_prob);

// sum_i P(x_i|y_j) log(T(theta_j|x_i) / T(theta_j)).
double semantic_kl_info(std::span<const double> cond, const Source& source,
                        std::span<const double> truth);

// sum_i P(x_i|y_j) log(P(x_i|theta_j) / P(x_i|theta_k)).
double semantic_info_loss(std::span<const double> cond_j, std::span<const double> likelihood_j,
                          std::span<const double> likelihood_k);

// sum_j sum_k P(y_j) P(yhat_k|y_j) KL(P(x|theta_j) || P(x|theta_k)).
double average_semantic_info_loss(const LabelDistribution& label_dist,
                                  const ShannonChannel& substitution,
                                  const std::vector<std::vector<double>>& likelihoods);

// Matrix of pairwise KL(P(x|theta_j) || P(x|theta_k)) between likelihoods,
// usable as a label-to-label distortion matrix.
DistortionMatrix semantic_loss_matrix(const std::vector<std::vector<double>>& likelihoods);

}  // namespace semg
