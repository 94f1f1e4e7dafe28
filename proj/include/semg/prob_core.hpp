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
#include <string>
#include <vector>

#include "semg/config.hpp"
#include "semg/matrix.hpp"

namespace semg {

// Probability vector over a named, ordered alphabet. The tag keeps instance
// distributions P(x) and label distributions P(y) from being mixed up.
template <class Tag>
class Distribution {
 public:
  Distribution() = default;
  // Identifiers default to "<prefix><index>".
  explicit Distribution(std::vector<double> probs);
  Distribution(std::vector<std::string> ids, std::vector<double> probs);

  static Distribution uniform(std::size_t n);
  // Normalizes nonnegative weights with a positive sum.
  static Distribution from_weights(std::vector<double> weights);
  static Distribution point_mass(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }

  // Same identifiers, new probabilities.
  Distribution with_probs(std::vector<double> probs) const;

 private:
  std::vector<std::string> ids_;
  std::vector<double> probs_;
};

struct InstanceTag {
  static constexpr const char* prefix = "x";
  static constexpr const char* what = "source";
};
struct LabelTag {
  static constexpr const char* prefix = "y";
  static constexpr const char* what = "label distribution";
};

using Source = Distribution<InstanceTag>;
using LabelDistribution = Distribution<LabelTag>;

extern template class Distribution<InstanceTag>;
extern template class Distribution<LabelTag>;

// P(y_j|x_i): entries in [0,1], rows sum to one.
class ShannonChannel {
 public:
  ShannonChannel() = default;
  explicit ShannonChannel(Matrix m);
  // Rescales each row to sum to one; rows must have a positive sum.
  static ShannonChannel from_row_weights(Matrix weights);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  Matrix m_;
};

// T(theta_j|x_i): one truth function per column, entries in [0,1], every
// column positive somewhere. Columns are not normalized against each other.
class SemanticChannel {
 public:
  SemanticChannel() = default;
  explicit SemanticChannel(Matrix m);
  static SemanticChannel from_columns(const std::vector<std::vector<double>>& columns);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  std::vector<double> column(std::size_t j) const { return m_.column(j); }

 private:
  Matrix m_;
};

// P(x_i, y_j).
class JointDistribution {
 public:
  JointDistribution() = default;
  explicit JointDistribution(Matrix m);
  static JointDistribution from(const Source& source, const ShannonChannel& channel);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  std::vector<double> instance_marginal() const;
  std::vector<double> label_marginal() const;

 private:
  Matrix m_;
};

// d(y_j|x_i) >= 0 in the configured log unit; +infinity allowed.
class DistortionMatrix {
 public:
  DistortionMatrix() = default;
  explicit DistortionMatrix(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  Matrix m_;
};

struct SemanticPrediction {
  std::vector<double> posterior;  // P(x|theta)
  double logical_prob = 0.0;      // T(theta)
};

// T(theta) = sum_i P(x_i) T(theta|x_i).
double logical_probability(const Source& source, std::span<const double> truth);

// Logical probability of every column of a semantic channel.
std::vector<double> logical_probabilities(const Source& source, const SemanticChannel& sem);

// P(x|theta) = T(theta|x) P(x) / T(theta). The truth column may carry any
// positive scale.
SemanticPrediction semantic_bayes(const Source& source, std::span<const double> truth);

// Inverse of semantic_bayes: truth proportional to P(x|theta)/P(x), scaled so
// the maximum is exactly one.
std::vector<double> truth_from_likelihood(const Source& source,
                                          std::span<const double> likelihood);

double truth_to_distortion(double truth) noexcept;
double distortion_to_truth(double distortion) noexcept;
DistortionMatrix truth_to_distortion(const SemanticChannel& sem);
SemanticChannel distortion_to_truth(const DistortionMatrix& d);

// exp(-(v - center)^2 / (2 sigma^2)) evaluated on the support values.
std::vector<double> gaussian_truth(std::span<const double> support_values, double center,
                                   double sigma);

// sum_i P(x_i) P(y_j|x_i).
LabelDistribution output_distribution(const Source& source, const ShannonChannel& channel);

// 0, 1, ..., n-1 as doubles; the default support values of an alphabet.
std::vector<double> index_values(std::size_t n);

}  // namespace semg
