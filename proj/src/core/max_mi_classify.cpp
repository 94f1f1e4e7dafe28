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

#include "semg/max_mi_classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "core/numeric.hpp"
#include "semg/info_measures.hpp"
#include "semg/truth_learning.hpp"

namespace semg {

using detail::require_arg;

ObservationModel::ObservationModel(Source source, ShannonChannel z_given_x,
                                   std::vector<std::string> z_ids)
    : source_(std::move(source)), z_given_x_(std::move(z_given_x)), z_ids_(std::move(z_ids)) {
  detail::require_same_size(source_.size(), z_given_x_.rows(), "observation model");
  const std::size_t n = z_given_x_.rows(), k = z_given_x_.cols();
  if (z_ids_.empty()) {
    for (std::size_t c = 0; c < k; ++c) z_ids_.push_back("z" + std::to_string(c));
  }
  detail::require_same_size(z_ids_.size(), k, "observation identifiers");
  z_marginal_.assign(k, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) z_marginal_[c] += source_[i] * z_given_x_(i, c);
  x_given_z_ = Matrix(n, k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    if (z_marginal_[c] <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      x_given_z_(i, c) = source_[i] * z_given_x_(i, c) / z_marginal_[c];
  }
}

std::size_t Partition::label_count() const {
  return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
}

namespace {

void check_partition(const ObservationModel& obs, const Partition& part) {
  detail::require_same_size(part.assignment.size(), obs.z_count(), "partition");
}

// Channel over the labels that carry probability mass.
ShannonChannel induced_channel(const ObservationModel& obs, const Partition& part,
                               std::vector<std::size_t>& labels) {
  const std::size_t n = obs.source().size(), k = obs.z_count();
  std::vector<double> mass(part.label_count(), 0.0);
  for (std::size_t c = 0; c < k; ++c) mass[part.assignment[c]] += obs.z_marginal()[c];
  labels.clear();
  std::vector<std::size_t> column(mass.size(), 0);
  for (std::size_t j = 0; j < mass.size(); ++j) {
    if (mass[j] <= 0.0) continue;
    column[j] = labels.size();
    labels.push_back(j);
  }
  Matrix m(n, labels.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t j = part.assignment[c];
      if (mass[j] > 0.0) m(i, column[j]) += obs.z_given_x()(i, c);
    }
    auto row = m.row(i);
    double sum = 0.0;
    for (double v : row) sum += v;
    if (sum > 0.0) {
      for (double& v : row) v /= sum;
    } else {
      std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(row.size()));
    }
  }
  return ShannonChannel(std::move(m));
}

}  // namespace

MatchingOneResult matching_one(const ObservationModel& obs, const Partition& partition) {
  check_partition(obs, partition);
  MatchingOneResult out;
  out.channel = induced_channel(obs, partition, out.labels);
  out.dropped_empty = out.labels.size() < partition.label_count();
  out.sem = lbi_direct(obs.source(), out.channel);
  const auto tj = logical_probabilities(obs.source(), out.sem);
  const std::size_t n = obs.source().size(), k = obs.z_count(), m = out.labels.size();
  out.reward = Matrix(k, m, 0.0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < m; ++j) {
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double w = obs.x_given_z()(i, c);
        if (detail::negligible(w)) continue;
        r += w * (detail::safe_log(out.sem(i, j)) - std::log(tj[j]));
      }
      out.reward(c, j) = to_units(r);
    }
  return out;
}

Partition matching_two(const Matrix& reward, const std::vector<std::size_t>& labels) {
  detail::require_same_size(reward.cols(), labels.size(), "matching_two labels");
  require_arg(!labels.empty(), "matching_two: no labels");
  Partition out;
  out.assignment.resize(reward.rows());
  for (std::size_t c = 0; c < reward.rows(); ++c) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < reward.cols(); ++j)
      if (reward(c, j) > reward(c, best)) best = j;
    out.assignment[c] = labels[best];
  }
  return out;
}

double partition_mutual_information(const ObservationModel& obs, const Partition& partition) {
  check_partition(obs, partition);
  std::vector<std::size_t> labels;
  return shannon_mi(obs.source(), induced_channel(obs, partition, labels));
}

ClassifyResult classify_iterate(const ObservationModel& obs, const Partition& init, int max_iter) {
  require_arg(max_iter >= 1, "max_iter must be at least 1");
  check_partition(obs, init);
  ClassifyResult out;
  Partition current = init;
  out.mi_trace.push_back(partition_mutual_information(obs, current));
  out.history.push_back(current);
  std::set<std::vector<std::size_t>> seen{current.assignment};
  Partition best = current;
  double best_mi = out.mi_trace.back();

  for (int round = 1; round <= max_iter; ++round) {
    const auto m1 = matching_one(obs, current);
    out.dropped_empty = out.dropped_empty || m1.dropped_empty;
    Partition next = matching_two(m1.reward, m1.labels);
    out.rounds = round;
    if (next == current) {
      out.converged = true;
      break;
    }
    const double mi = partition_mutual_information(obs, next);
    const double prev_mi = out.mi_trace.back();
    out.mi_trace.push_back(mi);
    out.history.push_back(next);
    if (mi > best_mi) {
      best_mi = mi;
      best = next;
    }
    if (mi < prev_mi - 1e-12) {
      out.monotone_violation = true;
      break;
    }
    if (!seen.insert(next.assignment).second) {
      out.cycle_detected = true;
      break;
    }
    current = std::move(next);
  }
  out.partition = out.converged ? current : best;
  return out;
}

}  // namespace semg
