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

#include "semg/truth_learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/numeric.hpp"
#include "semg/info_measures.hpp"

namespace semg {

using detail::require;
using detail::require_arg;

SemanticChannel lbi_direct(const Source& source, const ShannonChannel& channel) {
  detail::require_same_size(source.size(), channel.rows(), "lbi_direct");
  Matrix t(channel.rows(), channel.cols());
  for (std::size_t j = 0; j < channel.cols(); ++j) {
    double mx = 0.0;
    for (std::size_t i = 0; i < channel.rows(); ++i) mx = std::max(mx, channel(i, j));
    require(mx > 0.0, ErrorCode::empty_label, "label " + std::to_string(j) + " is never used");
    for (std::size_t i = 0; i < channel.rows(); ++i) t(i, j) = channel(i, j) / mx;
  }
  return SemanticChannel(std::move(t));
}

std::size_t family_arity(TruthFamily family) noexcept {
  return family == TruthFamily::gaussian ? 2 : 4;
}

const char* family_name(TruthFamily family) noexcept {
  return family == TruthFamily::gaussian ? "gaussian" : "trapezoid";
}

namespace {

std::vector<double> trapezoid_truth(std::span<const double> p, std::span<const double> values) {
  const double lf = p[0], ls = p[1], rs = p[2], rf = p[3];
  require_arg(lf <= ls && ls <= rs && rs <= rf,
              "trapezoid knots must satisfy left foot <= left shoulder <= right shoulder <= "
              "right foot");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (v >= ls && v <= rs) {
      out[i] = 1.0;
    } else if (v < ls) {
      out[i] = (v > lf) ? (v - lf) / (ls - lf) : 0.0;
    } else {
      out[i] = (v < rf) ? (rf - v) / (rf - rs) : 0.0;
    }
  }
  return out;
}

}  // namespace

std::vector<double> evaluate_family(TruthFamily family, std::span<const double> params,
                                    std::span<const double> support_values) {
  require_arg(params.size() == family_arity(family),
              std::string(family_name(family)) + " truth function: wrong parameter count");
  if (family == TruthFamily::gaussian) return gaussian_truth(support_values, params[0], params[1]);
  return trapezoid_truth(params, support_values);
}

ParameterGrid ParameterGrid::gaussian(std::span<const double> centers,
                                      std::span<const double> sigmas) {
  ParameterGrid g;
  g.family = TruthFamily::gaussian;
  for (double c : centers)
    for (double s : sigmas) g.points.push_back({c, s});
  return g;
}

ParameterGrid ParameterGrid::trapezoid(std::span<const double> knots) {
  std::vector<double> k(knots.begin(), knots.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  ParameterGrid g;
  g.family = TruthFamily::trapezoid;
  const std::size_t n = k.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) g.points.push_back({k[a], k[b], k[c], k[d]});
  return g;
}

FitResult lbi_parametric(std::span<const double> cond, const Source& source,
                         std::span<const double> support_values, const ParameterGrid& grid) {
  detail::require_same_size(cond.size(), source.size(), "lbi_parametric");
  detail::require_same_size(support_values.size(), source.size(), "lbi_parametric support");
  require_arg(!grid.points.empty(), "lbi_parametric: empty parameter grid");
  FitResult best;
  bool found = false;
  for (std::size_t k = 0; k < grid.points.size(); ++k) {
    const auto truth = evaluate_family(grid.family, grid.points[k], support_values);
    if (logical_probability(source, truth) <= 0.0) continue;
    const double score = semantic_kl_info(cond, source, truth);
    if (!found || score > best.score) {
      best.params = grid.points[k];
      best.score = score;
      best.index = k;
      found = true;
    }
  }
  require(found, ErrorCode::all_zero_overlap,
          "lbi_parametric: no grid point overlaps the source");
  return best;
}

FitResult multilabel_equal_prior(std::span<const double> channel_column,
                                 std::span<const double> support_values,
                                 const ParameterGrid& grid) {
  double sum = 0.0;
  for (double v : channel_column) {
    require_arg(std::isfinite(v) && v >= 0.0, "channel column entries must be nonnegative");
    sum += v;
  }
  require(sum > 0.0, ErrorCode::empty_label, "channel column is all zero");
  std::vector<double> cond(channel_column.begin(), channel_column.end());
  for (double& v : cond) v /= sum;
  return lbi_parametric(cond, Source::uniform(cond.size()), support_values, grid);
}

std::size_t classify_max_info(std::span<const double> truth_row,
                              std::span<const double> logical_probs,
                              ClassifyCriterion criterion) {
  detail::require_same_size(truth_row.size(), logical_probs.size(), "classify_max_info");
  require_arg(!truth_row.empty(), "classify_max_info: no labels");
  bool any_positive = false;
  for (std::size_t j = 0; j < truth_row.size(); ++j) {
    require(logical_probs[j] > 0.0, ErrorCode::non_positive_logical_prob,
            "logical probabilities must be positive");
    any_positive = any_positive || truth_row[j] > 0.0;
  }
  require(any_positive, ErrorCode::no_positive_truth, "no label is true for this instance");
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < truth_row.size(); ++j) {
    const double score = criterion == ClassifyCriterion::max_information
                             ? detail::safe_log(truth_row[j]) - std::log(logical_probs[j])
                             : truth_row[j];
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

}  // namespace semg
