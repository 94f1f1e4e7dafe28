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

#include "core/mid_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/numeric.hpp"

namespace semg::detail {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();
}  // namespace

Matrix log_information_ratios(const Source& source, const SemanticChannel& sem) {
  require_same_size(source.size(), sem.rows(), "information ratios");
  const auto tj = logical_probabilities(source, sem);
  Matrix out(sem.rows(), sem.cols(), kNegInf);
  for (std::size_t j = 0; j < sem.cols(); ++j) {
    if (tj[j] <= 0.0) continue;
    const double log_tj = std::log(tj[j]);
    for (std::size_t i = 0; i < sem.rows(); ++i) out(i, j) = safe_log(sem(i, j)) - log_tj;
  }
  return out;
}

Matrix log_truth(const SemanticChannel& sem) {
  Matrix out(sem.rows(), sem.cols());
  for (std::size_t i = 0; i < sem.rows(); ++i)
    for (std::size_t j = 0; j < sem.cols(); ++j) out(i, j) = safe_log(sem(i, j));
  return out;
}

Matrix exponential_channel(const Source& source, std::span<const double> label_probs,
                           const Matrix& log_weight, double s, std::vector<double>* log_z) {
  const std::size_t n = log_weight.rows(), m = log_weight.cols();
  require_same_size(source.size(), n, "channel step (instances)");
  require_same_size(label_probs.size(), m, "channel step (labels)");
  require_arg(std::isfinite(s), "slope s must be finite");
  Matrix out(n, m, 0.0);
  if (log_z) log_z->assign(n, 0.0);
  std::vector<double> lw(m);
  for (std::size_t i = 0; i < n; ++i) {
    bool unbounded = false;
    for (std::size_t j = 0; j < m; ++j) {
      const double p = label_probs[j];
      const double lm = log_weight(i, j);
      if (p <= 0.0) {
        lw[j] = kNegInf;
      } else if (lm == kNegInf) {
        lw[j] = s > 0.0 ? kNegInf : (s == 0.0 ? std::log(p) : kPosInf);
      } else {
        lw[j] = std::log(p) + s * lm;
      }
      unbounded = unbounded || lw[j] == kPosInf;
    }
    auto row = out.row(i);
    if (unbounded) {
      // Negative slope and a zero truth value: those labels take all mass.
      double total = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (lw[j] == kPosInf) total += label_probs[j];
      for (std::size_t j = 0; j < m; ++j) row[j] = lw[j] == kPosInf ? label_probs[j] / total : 0.0;
      if (log_z) (*log_z)[i] = kPosInf;
      continue;
    }
    const double lse = log_sum_exp(lw);
    if (lse == kNegInf) {
      require(source[i] <= 0.0, ErrorCode::degenerate_row,
              "instance " + std::to_string(i) + " is excluded by every label");
      // Instance outside the source support: any row will do.
      const double total = std::accumulate(label_probs.begin(), label_probs.end(), 0.0);
      for (std::size_t j = 0; j < m; ++j) row[j] = label_probs[j] / total;
      if (log_z) (*log_z)[i] = kNegInf;
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) row[j] = std::exp(lw[j] - lse);
    if (log_z) (*log_z)[i] = lse;
  }
  return out;
}

std::vector<double> channel_marginal(const Source& source, const Matrix& channel) {
  std::vector<double> p(channel.cols(), 0.0);
  for (std::size_t i = 0; i < channel.rows(); ++i) {
    const double px = source[i];
    if (px == 0.0) continue;
    const auto row = channel.row(i);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += px * row[j];
  }
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return p;
}

MidRun run_mid(const Source& source, const Matrix& log_weight, double s,
               std::vector<double> init, const SolverOptions& options,
               const IterationCallback& callback) {
  require_arg(options.tol > 0.0, "tolerance must be positive");
  require_arg(options.max_iter >= 1, "max_iter must be at least 1");
  require_same_size(init.size(), log_weight.cols(), "initial label distribution");
  check_probability_vector(init, "initial label distribution");
  if (s == 0.0) return constant_label_run(source, log_weight, init);

  MidRun run;
  std::vector<double> p = std::move(init);
  for (int it = 1; it <= options.max_iter; ++it) {
    Matrix ch = exponential_channel(source, p, log_weight, s, nullptr);
    if (callback) callback(it, ShannonChannel(ch), p);
    std::vector<double> next = channel_marginal(source, ch);
    double delta = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) delta = std::max(delta, std::abs(next[j] - p[j]));
    p = std::move(next);
    run.iterations = it;
    if (delta < options.tol) {
      run.converged = true;
      break;
    }
  }
  run.channel = exponential_channel(source, p, log_weight, s, &run.log_z);
  run.label_probs = std::move(p);
  return run;
}

std::size_t best_constant_label(const Source& source, const Matrix& log_weight,
                                std::span<const double> init) {
  std::size_t best = log_weight.cols();
  double best_score = kNegInf;
  for (std::size_t j = 0; j < log_weight.cols(); ++j) {
    if (init[j] <= 0.0) continue;
    double score = 0.0;
    for (std::size_t i = 0; i < log_weight.rows(); ++i) {
      if (source[i] == 0.0) continue;
      score += source[i] * log_weight(i, j);
    }
    if (best == log_weight.cols() || score > best_score) {
      best = j;
      best_score = score;
    }
  }
  return best;
}

MidRun constant_label_run(const Source& source, const Matrix& log_weight,
                          std::span<const double> init) {
  const std::size_t best = best_constant_label(source, log_weight, init);
  MidRun run;
  run.channel = Matrix(log_weight.rows(), log_weight.cols(), 0.0);
  for (std::size_t i = 0; i < log_weight.rows(); ++i) run.channel(i, best) = 1.0;
  run.label_probs.assign(log_weight.cols(), 0.0);
  run.label_probs[best] = 1.0;
  run.log_z.assign(log_weight.rows(), 0.0);
  run.iterations = 0;
  run.converged = true;
  return run;
}

void snap_one_hot(Matrix& channel) {
  for (std::size_t i = 0; i < channel.rows(); ++i) {
    auto row = channel.row(i);
    const auto it = std::max_element(row.begin(), row.end());
    if (*it > 1.0 - kOneHotSnap) {
      const auto k = static_cast<std::size_t>(it - row.begin());
      std::fill(row.begin(), row.end(), 0.0);
      row[k] = 1.0;
    }
  }
}

double channel_average(const Source& source, const Matrix& channel, const Matrix& log_weight) {
  double total = 0.0;
  for (std::size_t i = 0; i < channel.rows(); ++i) {
    if (source[i] == 0.0) continue;
    for (std::size_t j = 0; j < channel.cols(); ++j) {
      const double w = source[i] * channel(i, j);
      if (negligible(w)) continue;
      total += w * log_weight(i, j);
    }
  }
  return total;
}

double shannon_mi_nats(const Source& source, const Matrix& channel) {
  const auto py = channel_marginal(source, channel);
  double mi = 0.0;
  for (std::size_t i = 0; i < channel.rows(); ++i)
    for (std::size_t j = 0; j < channel.cols(); ++j) {
      const double w = source[i] * channel(i, j);
      if (negligible(w)) continue;
      mi += w * std::log(channel(i, j) / py[j]);
    }
  return mi;
}

std::vector<double> revive_support(std::span<const double> probs) {
  constexpr double kFloor = 1e-9;
  const bool tiny = std::any_of(probs.begin(), probs.end(), [](double v) { return v < kFloor; });
  std::vector<double> out(probs.begin(), probs.end());
  if (!tiny) return out;
  const double mix = 1e-6;
  const double u = 1.0 / static_cast<double>(out.size());
  for (double& v : out) v = (1.0 - mix) * v + mix * u;
  return out;
}

}  // namespace semg::detail
