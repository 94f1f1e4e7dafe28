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

#include "semg/prob_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "core/numeric.hpp"

namespace semg {

namespace detail {

void check_probability_vector(std::span<const double> p, const char* what) {
  require_arg(!p.empty(), std::string(what) + ": empty");
  double sum = 0.0;
  for (double v : p) {
    require_arg(std::isfinite(v) && v >= 0.0,
                std::string(what) + ": entries must be finite and nonnegative");
    sum += v;
  }
  require_arg(std::abs(sum - 1.0) <= kSumTolerance,
              std::string(what) + ": probabilities sum to " + std::to_string(sum));
}

void check_weights(std::span<const double> w, const char* what) {
  require_arg(!w.empty(), std::string(what) + ": empty");
  double sum = 0.0;
  for (double v : w) {
    require_arg(std::isfinite(v) && v >= 0.0,
                std::string(what) + ": entries must be finite and nonnegative");
    sum += v;
  }
  require_arg(sum > 0.0, std::string(what) + ": all entries are zero");
}

std::vector<double> normalized(std::span<const double> w) {
  check_weights(w, "weights");
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> out(w.begin(), w.end());
  for (double& v : out) v /= sum;
  return out;
}

std::vector<double> posterior_column(const Source& source, const ShannonChannel& channel,
                                     std::size_t j, double& label_prob) {
  const std::size_t n = source.size();
  std::vector<double> out(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = source[i] * channel(i, j);
    total += out[i];
  }
  label_prob = total;
  if (total > 0.0)
    for (double& v : out) v /= total;
  return out;
}

}  // namespace detail

using detail::require;
using detail::require_arg;

template <class Tag>
Distribution<Tag>::Distribution(std::vector<double> probs) {
  std::vector<std::string> ids(probs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = Tag::prefix + std::to_string(i);
  *this = Distribution(std::move(ids), std::move(probs));
}

template <class Tag>
Distribution<Tag>::Distribution(std::vector<std::string> ids, std::vector<double> probs)
    : ids_(std::move(ids)), probs_(std::move(probs)) {
  detail::require_same_size(ids_.size(), probs_.size(), Tag::what);
  detail::check_probability_vector(probs_, Tag::what);
  std::unordered_set<std::string> seen;
  for (const auto& id : ids_) {
    require_arg(seen.insert(id).second, std::string(Tag::what) + ": duplicate identifier '" +
                                            id + "'");
  }
}

template <class Tag>
Distribution<Tag> Distribution<Tag>::uniform(std::size_t n) {
  require_arg(n > 0, std::string(Tag::what) + ": empty alphabet");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

template <class Tag>
Distribution<Tag> Distribution<Tag>::from_weights(std::vector<double> weights) {
  return Distribution(detail::normalized(weights));
}

template <class Tag>
Distribution<Tag> Distribution<Tag>::point_mass(std::size_t n, std::size_t index) {
  require_arg(index < n, std::string(Tag::what) + ": point mass index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return Distribution(std::move(p));
}

template <class Tag>
Distribution<Tag> Distribution<Tag>::with_probs(std::vector<double> probs) const {
  return Distribution(ids_, std::move(probs));
}

template class Distribution<InstanceTag>;
template class Distribution<LabelTag>;

ShannonChannel::ShannonChannel(Matrix m) : m_(std::move(m)) {
  require_arg(m_.rows() > 0 && m_.cols() > 0, "Shannon channel: empty matrix");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    double sum = 0.0;
    for (double v : m_.row(i)) {
      require_arg(std::isfinite(v) && v >= 0.0 && v <= 1.0 + kSumTolerance,
                  "Shannon channel: entries must lie in [0,1]");
      sum += v;
    }
    require_arg(std::abs(sum - 1.0) <= kSumTolerance,
                "Shannon channel: row " + std::to_string(i) + " sums to " +
                    std::to_string(sum));
  }
}

ShannonChannel ShannonChannel::from_row_weights(Matrix weights) {
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    auto row = weights.row(i);
    detail::check_weights(row, "channel row weights");
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    for (double& v : row) v /= sum;
  }
  return ShannonChannel(std::move(weights));
}

SemanticChannel::SemanticChannel(Matrix m) : m_(std::move(m)) {
  require_arg(m_.rows() > 0 && m_.cols() > 0, "semantic channel: empty matrix");
  for (std::size_t j = 0; j < m_.cols(); ++j) {
    bool positive = false;
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      const double v = m_(i, j);
      require_arg(std::isfinite(v) && v >= 0.0 && v <= 1.0,
                  "semantic channel: truth values must lie in [0,1]");
      positive = positive || v > 0.0;
    }
    require_arg(positive, "semantic channel: column " + std::to_string(j) + " is all zero");
  }
}

SemanticChannel SemanticChannel::from_columns(const std::vector<std::vector<double>>& columns) {
  require_arg(!columns.empty(), "semantic channel: no columns");
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return SemanticChannel(std::move(m));
}

JointDistribution::JointDistribution(Matrix m) : m_(std::move(m)) {
  require_arg(!m_.empty(), "joint distribution: empty matrix");
  detail::check_probability_vector(m_.data(), "joint distribution");
}

JointDistribution JointDistribution::from(const Source& source, const ShannonChannel& channel) {
  detail::require_same_size(source.size(), channel.rows(), "joint distribution");
  Matrix m(channel.rows(), channel.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = source[i] * channel(i, j);
  return JointDistribution(std::move(m));
}

std::vector<double> JointDistribution::instance_marginal() const {
  std::vector<double> out(rows(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (double v : m_.row(i)) out[i] += v;
  return out;
}

std::vector<double> JointDistribution::label_marginal() const {
  std::vector<double> out(cols(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[j] += m_(i, j);
  return out;
}

DistortionMatrix::DistortionMatrix(Matrix m) : m_(std::move(m)) {
  require_arg(!m_.empty(), "distortion matrix: empty matrix");
  for (double v : m_.data()) {
    require_arg(!std::isnan(v) && v >= 0.0, "distortion matrix: entries must be >= 0");
  }
}

double logical_probability(const Source& source, std::span<const double> truth) {
  detail::require_same_size(source.size(), truth.size(), "logical probability");
  double t = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    require_arg(std::isfinite(truth[i]) && truth[i] >= 0.0,
                "truth values must be finite and nonnegative");
    t += source[i] * truth[i];
  }
  return t;
}

std::vector<double> logical_probabilities(const Source& source, const SemanticChannel& sem) {
  detail::require_same_size(source.size(), sem.rows(), "logical probabilities");
  std::vector<double> out(sem.cols(), 0.0);
  for (std::size_t i = 0; i < sem.rows(); ++i)
    for (std::size_t j = 0; j < sem.cols(); ++j) out[j] += source[i] * sem(i, j);
  return out;
}

SemanticPrediction semantic_bayes(const Source& source, std::span<const double> truth) {
  SemanticPrediction out;
  out.logical_prob = logical_probability(source, truth);
  require(out.logical_prob > 0.0, ErrorCode::all_zero_overlap,
          "truth function has no overlap with the source");
  out.posterior.resize(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i)
    out.posterior[i] = truth[i] * source[i] / out.logical_prob;
  return out;
}

std::vector<double> truth_from_likelihood(const Source& source,
                                          std::span<const double> likelihood) {
  detail::require_same_size(source.size(), likelihood.size(), "truth from likelihood");
  detail::check_weights(likelihood, "likelihood");
  std::vector<double> ratio(likelihood.size(), 0.0);
  double mx = 0.0;
  for (std::size_t i = 0; i < likelihood.size(); ++i) {
    if (likelihood[i] == 0.0) continue;
    require(source[i] > 0.0, ErrorCode::domain_mismatch,
            "likelihood is positive where the source is zero (index " + std::to_string(i) +
                ")");
    ratio[i] = likelihood[i] / source[i];
    mx = std::max(mx, ratio[i]);
  }
  for (double& r : ratio) r /= mx;
  return ratio;
}

double truth_to_distortion(double truth) noexcept {
  if (truth <= 0.0) return kInfinity;
  const double d = -std::log(truth) / log_unit();
  return d == 0.0 ? 0.0 : d;  // avoid -0 for truth = 1
}

double distortion_to_truth(double distortion) noexcept {
  if (std::isinf(distortion)) return 0.0;
  return std::exp(-distortion * log_unit());
}

DistortionMatrix truth_to_distortion(const SemanticChannel& sem) {
  Matrix d(sem.rows(), sem.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) = truth_to_distortion(sem(i, j));
  return DistortionMatrix(std::move(d));
}

SemanticChannel distortion_to_truth(const DistortionMatrix& dist) {
  Matrix t(dist.rows(), dist.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = distortion_to_truth(dist(i, j));
  return SemanticChannel(std::move(t));
}

std::vector<double> gaussian_truth(std::span<const double> support_values, double center,
                                   double sigma) {
  require(sigma > 0.0 && std::isfinite(sigma), ErrorCode::non_positive_sigma,
          "sigma must be positive");
  std::vector<double> out(support_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double z = (support_values[i] - center) / sigma;
    out[i] = std::exp(-0.5 * z * z);
  }
  return out;
}

LabelDistribution output_distribution(const Source& source, const ShannonChannel& channel) {
  detail::require_same_size(source.size(), channel.rows(), "output distribution");
  std::vector<double> p(channel.cols(), 0.0);
  for (std::size_t i = 0; i < channel.rows(); ++i)
    for (std::size_t j = 0; j < channel.cols(); ++j) p[j] += source[i] * channel(i, j);
  // Rounding can leave the sum a few ulps away from one; renormalize.
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return LabelDistribution(std::move(p));
}

std::vector<double> index_values(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i);
  return out;
}

}  // namespace semg
