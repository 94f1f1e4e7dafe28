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
#include <string>
#include <vector>

#include "semg/prob_core.hpp"

namespace semg {

// Observation z of an instance x. Holds both directions of the conditional.
class ObservationModel {
 public:
  ObservationModel() = default;
  // z_given_x: |U| x |Z| row-stochastic P(z|x).
  ObservationModel(Source source, ShannonChannel z_given_x, std::vector<std::string> z_ids = {});

  const Source& source() const noexcept { return source_; }
  const ShannonChannel& z_given_x() const noexcept { return z_given_x_; }
  // |U| x |Z|, column k = P(x|z_k); zero for unobservable z.
  const Matrix& x_given_z() const noexcept { return x_given_z_; }
  const std::vector<double>& z_marginal() const noexcept { return z_marginal_; }
  const std::vector<std::string>& z_ids() const noexcept { return z_ids_; }
  std::size_t z_count() const noexcept { return z_marginal_.size(); }

 private:
  Source source_;
  ShannonChannel z_given_x_;
  Matrix x_given_z_;
  std::vector<double> z_marginal_;
  std::vector<std::string> z_ids_;
};

// assignment[k] = label of observation z_k.
struct Partition {
  std::vector<std::size_t> assignment;

  std::size_t label_count() const;  // 1 + largest label
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct MatchingOneResult {
  std::vector<std::size_t> labels;  // labels kept (non-empty), ascending
  ShannonChannel channel;           // P(y|x) over kept labels
  SemanticChannel sem;              // lbi_direct of channel
  Matrix reward;                    // |Z| x kept labels, I(X;theta_j|z)
  bool dropped_empty = false;
};

MatchingOneResult matching_one(const ObservationModel& obs, const Partition& partition);

// assignment[k] = labels[argmax_j reward(k, j)], lowest index on ties.
Partition matching_two(const Matrix& reward, const std::vector<std::size_t>& labels);

// Shannon MI of the channel induced by the partition.
double partition_mutual_information(const ObservationModel& obs, const Partition& partition);

struct ClassifyResult {
  Partition partition;
  std::vector<double> mi_trace;  // entry 0 is the initial partition
  std::vector<Partition> history;
  int rounds = 0;
  bool converged = false;
  bool cycle_detected = false;
  bool dropped_empty = false;
  bool monotone_violation = false;
};

// Repeats Matching I and II until the partition is unchanged. On a revisited
// partition (cycle) or a drop in MI, stops and returns the best partition seen
// with the matching flag set.
ClassifyResult classify_iterate(const ObservationModel& obs, const Partition& init,
                                int max_iter = 100);

}  // namespace semg
