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

#include "semg/info_measures.hpp"

#include <cmath>

#include "core/numeric.hpp"

namespace semg {

using detail::negligible;
using detail::require;
using detail::require_arg;
using detail::safe_log;

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (!negligible(p)) h -= p * std::log(p);
  return to_units(h);
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  detail::require_same_size(p.size(), q.size(), "KL divergence");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (negligible(p[i])) continue;
    if (q[i] <= 0.0) return kInfinity;
    kl += p[i] * std::log(p[i] / q[i]);
  }
  return to_units(kl);
}

double shannon_mi(const JointDistribution& joint) {
  const auto px = joint.instance_marginal();
  const auto py = joint.label_marginal();
  double mi = 0.0;
  for (std::size_t i = 0; i < joint.rows(); ++i)
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const double pxy = joint(i, j);
      if (negligible(pxy)) continue;
      mi += pxy * std::log(pxy / (px[i] * py[j]));
    }
  return to_units(mi);
}

double shannon_mi(const Source& source, const ShannonChannel& channel) {
  detail::require_same_size(source.size(), channel.rows(), "Shannon MI");
  const std::size_t n = channel.rows(), m = channel.cols();
  std::vector<double> py(m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) py[j] += source[i] * channel(i, j);
  double mi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double w = source[i] * channel(i, j);
      if (negligible(w)) continue;
      mi += w * std::log(channel(i, j) / py[j]);
    }
  return to_units(mi);
}

MeasureReport semantic_mi(const Source& source, const ShannonChannel& channel,
                          const SemanticChannel& sem) {
  detail::require_same_size(source.size(), channel.rows(), "semantic MI (channel rows)");
  detail::require_same_size(source.size(), sem.rows(), "semantic MI (truth rows)");
  detail::require_same_size(channel.cols(), sem.cols(), "semantic MI (labels)");
  const std::size_t n = channel.rows(), m = channel.cols();

  std::vector<double> py(m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) py[j] += source[i] * channel(i, j);
  const auto tj = logical_probabilities(source, sem);

  MeasureReport r;
  for (std::size_t j = 0; j < m; ++j) {
    if (negligible(py[j])) continue;
    require(tj[j] > 0.0, ErrorCode::all_zero_overlap,
            "label " + std::to_string(j) + " has no overlap with the source");
    const double log_tj = std::log(tj[j]);
    double used = 0.0;  // mass of the cells that enter the sums below
    for (std::size_t i = 0; i < n; ++i) {
      const double w = source[i] * channel(i, j);
      if (negligible(w)) continue;
      used += w;
      const double log_t = safe_log(sem(i, j));
      const double log_shannon = std::log(channel(i, j) / py[j]);
      r.shannon_mi += w * log_shannon;
      r.semantic_mi += w * (log_t - log_tj);
      r.fuzzy_entropy -= w * log_t;
      r.semantic_posterior_entropy -= w * (std::log(source[i]) + log_t - log_tj);
      r.residual_kl += w * (log_shannon - (log_t - log_tj));
    }
    r.semantic_entropy -= used * log_tj;
  }
  r.shannon_mi = to_units(r.shannon_mi);
  r.semantic_mi = to_units(r.semantic_mi);
  r.semantic_entropy = to_units(r.semantic_entropy);
  r.fuzzy_entropy = to_units(r.fuzzy_entropy);
  r.semantic_posterior_entropy = to_units(r.semantic_posterior_entropy);
  r.residual_kl = to_units(r.residual_kl);
  return r;
}

double pointwise_g(double truth_value, double logical_prob) {
  require(logical_prob > 0.0, ErrorCode::non_positive_logical_prob,
          "logical probability must be positive");
  require_arg(truth_value >= 0.0, "truth value must be nonnegative");
  return to_units(safe_log(truth_value) - std::log(logical_prob));
}

double semantic_kl_info(std::span<const double> cond, const Source& source,
                        std::span<const double> truth) {
  detail::require_same_size(cond.size(), source.size(), "semantic KL information");
  const double tj = logical_probability(source, truth);
  require(tj > 0.0, ErrorCode::all_zero_overlap, "truth function has no overlap with the source");
  const double log_tj = std::log(tj);
  double info = 0.0;
  for (std::size_t i = 0; i < cond.size(); ++i) {
    if (negligible(cond[i])) continue;
    info += cond[i] * (safe_log(truth[i]) - log_tj);
  }
  return to_units(info);
}

double semantic_info_loss(std::span<const double> cond_j, std::span<const double> likelihood_j,
                          std::span<const double> likelihood_k) {
  detail::require_same_size(cond_j.size(), likelihood_j.size(), "semantic information loss");
  detail::require_same_size(cond_j.size(), likelihood_k.size(), "semantic information loss");
  double loss = 0.0;
  for (std::size_t i = 0; i < cond_j.size(); ++i) {
    if (negligible(cond_j[i])) continue;
    if (likelihood_k[i] <= 0.0) return kInfinity;
    loss += cond_j[i] * (safe_log(likelihood_j[i]) - std::log(likelihood_k[i]));
  }
  return to_units(loss);
}

double average_semantic_info_loss(const LabelDistribution& label_dist,
                                  const ShannonChannel& substitution,
                                  const std::vector<std::vector<double>>& likelihoods) {
  detail::require_same_size(label_dist.size(), substitution.rows(), "average loss (labels)");
  detail::require_same_size(substitution.cols(), likelihoods.size(), "average loss (likelihoods)");
  detail::require_same_size(substitution.rows(), likelihoods.size(), "average loss (square)");
  double total = 0.0;
  for (std::size_t j = 0; j < label_dist.size(); ++j)
    for (std::size_t k = 0; k < substitution.cols(); ++k) {
      const double w = label_dist[j] * substitution(j, k);
      if (negligible(w)) continue;
      total += w * kl_divergence(likelihoods[j], likelihoods[k]);
    }
  return total;
}

DistortionMatrix semantic_loss_matrix(const std::vector<std::vector<double>>& likelihoods) {
  require_arg(!likelihoods.empty(), "semantic loss matrix: no likelihoods");
  const std::size_t m = likelihoods.size();
  Matrix d(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) d(j, k) = kl_divergence(likelihoods[j], likelihoods[k]);
  return DistortionMatrix(std::move(d));
}

}  // namespace semg
