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

#include "semg/matrix.hpp"
#include "semg/prob_core.hpp"
#include "semg/rate_solvers.hpp"

namespace semg::detail {

// log(T(theta_j|x_i) / T(theta_j)) in nats; -inf where the truth is zero and for
// whole columns without overlap with the source.
Matrix log_information_ratios(const Source& source, const SemanticChannel& sem);

// log T(theta_j|x_i) in nats.
Matrix log_truth(const SemanticChannel& sem);

// Row-stochastic P(y_j|x_i) proportional to P(y_j) exp(s * log_weight(i, j)).
// log_z receives the row normalizers log sum_k P(y_k) exp(s * log_weight(i, k)).
Matrix exponential_channel(const Source& source, std::span<const double> label_probs,
                           const Matrix& log_weight, double s, std::vector<double>* log_z);

std::vector<double> channel_marginal(const Source& source, const Matrix& channel);

struct MidRun {
  Matrix channel;  // computed from label_probs
  std::vector<double> label_probs;
  std::vector<double> log_z;
  int iterations = 0;
  bool converged = false;
};

MidRun run_mid(const Source& source, const Matrix& log_weight, double s,
               std::vector<double> init, const SolverOptions& options,
               const IterationCallback& callback = {});

// Label with the largest source-averaged log weight among labels allowed by
// init; the s -> 0+ limit of the alternation.
std::size_t best_constant_label(const Source& source, const Matrix& log_weight,
                                std::span<const double> init);

// Run for s = 0: every instance sent to best_constant_label.
MidRun constant_label_run(const Source& source, const Matrix& log_weight,
                          std::span<const double> init);

// Rows with largest entry above 1 - kOneHotSnap become exact one-hot rows.
void snap_one_hot(Matrix& channel);

// sum_i P(x_i) sum_j P(y_j|x_i) log_weight(i, j) in nats, skipping zero cells.
double channel_average(const Source& source, const Matrix& channel, const Matrix& log_weight);

// Shannon MI in nats of a raw channel matrix.
double shannon_mi_nats(const Source& source, const Matrix& channel);

// Floors tiny entries so that a warm start cannot lock labels at zero.
std::vector<double> revive_support(std::span<const double> probs);

}  // namespace semg::detail
