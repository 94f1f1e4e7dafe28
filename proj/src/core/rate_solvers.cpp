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

#include "semg/rate_solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "core/mid_engine.hpp"
#include "core/numeric.hpp"

namespace semg {

using detail::require_arg;

ShannonChannel mid_channel_step(const Source& source, const LabelDistribution& label_dist,
                                const SemanticChannel& sem, double s) {
  const Matrix log_m = detail::log_information_ratios(source, sem);
  return ShannonChannel(
      detail::exponential_channel(source, label_dist.probs(), log_m, s, nullptr));
}

LabelDistribution mid_marginal_step(const Source& source, const ShannonChannel& channel) {
  return output_distribution(source, channel);
}

namespace {

RGPoint make_rg_point(const Source& source, const Matrix& log_m, double s, detail::MidRun run) {
  RGPoint pt;
  pt.s = s;
  pt.iterations = run.iterations;
  pt.converged = run.converged;
  const bool snapped = s >= kInfiniteSlope;
  if (snapped) detail::snap_one_hot(run.channel);

  const double g = detail::channel_average(source, run.channel, log_m);
  bool parametric = !snapped && std::isfinite(g) && s != 0.0;
  double log_z_avg = 0.0;
  for (std::size_t i = 0; parametric && i < source.size(); ++i) {
    if (source[i] == 0.0) continue;
    if (!std::isfinite(run.log_z[i])) parametric = false;
    log_z_avg += source[i] * run.log_z[i];
  }
  const double r = parametric ? s * g - log_z_avg : detail::shannon_mi_nats(source, run.channel);
  pt.G = to_units(g);
  pt.R = to_units(r);
  pt.label_dist = LabelDistribution(detail::channel_marginal(source, run.channel));
  pt.channel = ShannonChannel(std::move(run.channel));
  return pt;
}

}  // namespace

RGPoint solve_rg_point(const Source& source, const SemanticChannel& sem, double s,
                       const LabelDistribution& init, const SolverOptions& options,
                       const IterationCallback& callback) {
  detail::require_same_size(init.size(), sem.cols(), "solve_rg_point initial labels");
  const Matrix log_m = detail::log_information_ratios(source, sem);
  auto run = detail::run_mid(source, log_m, s, {init.probs().begin(), init.probs().end()},
                             options, callback);
  return make_rg_point(source, log_m, s, std::move(run));
}

RGPoint solve_rg_point(const Source& source, const SemanticChannel& sem, double s,
                       const SolverOptions& options) {
  return solve_rg_point(source, sem, s, LabelDistribution::uniform(sem.cols()), options);
}

RGCurve solve_rg_curve(const Source& source, const SemanticChannel& sem,
                       std::span<const double> s_grid, const CurveOptions& options) {
  require_arg(!s_grid.empty(), "empty s grid");
  require_arg(std::is_sorted(s_grid.begin(), s_grid.end()), "s grid must be sorted ascending");
  for (double s : s_grid) require_arg(std::isfinite(s), "s grid values must be finite");

  RGCurve curve;
  curve.source = source;
  curve.sem = sem;
  curve.points.resize(s_grid.size());
  const Matrix log_m = detail::log_information_ratios(source, sem);
  const std::vector<double> uniform(sem.cols(), 1.0 / static_cast<double>(sem.cols()));

  if (options.warm_start || options.jobs <= 1) {
    std::vector<double> init = uniform;
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      auto run = detail::run_mid(source, log_m, s_grid[k], init, options.solver);
      curve.points[k] = make_rg_point(source, log_m, s_grid[k], std::move(run));
      if (options.warm_start) init = detail::revive_support(curve.points[k].label_dist.probs());
    }
    return curve;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(options.jobs);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t k = next++; k < s_grid.size(); k = next++) {
        auto run = detail::run_mid(source, log_m, s_grid[k], uniform, options.solver);
        curve.points[k] = make_rg_point(source, log_m, s_grid[k], std::move(run));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < options.jobs; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return curve;
}

namespace {

RDPoint rd_solve(const Source& source, const Matrix& log_t, double s, std::vector<double> init,
                 const SolverOptions& options) {
  auto run = detail::run_mid(source, log_t, s, std::move(init), options);
  RDPoint pt;
  pt.s = s;
  pt.iterations = run.iterations;
  pt.converged = run.converged;
  pt.D = to_units(-detail::channel_average(source, run.channel, log_t));
  if (pt.D == 0.0) pt.D = 0.0;
  pt.R = to_units(detail::shannon_mi_nats(source, run.channel));
  pt.label_dist = LabelDistribution(detail::channel_marginal(source, run.channel));
  pt.channel = ShannonChannel(std::move(run.channel));
  return pt;
}

Matrix log_truth_from_distortion(const DistortionMatrix& d) {
  Matrix out(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      out(i, j) = std::isinf(d(i, j)) ? -kInfinity : -d(i, j) * log_unit();
  return out;
}

}  // namespace

RDPoint solve_rd_semantic(const Source& source, const SemanticChannel& constraint, double s,
                          const LabelDistribution& init, const SolverOptions& options) {
  detail::require_same_size(source.size(), constraint.rows(), "solve_rd_semantic");
  return rd_solve(source, detail::log_truth(constraint), s,
                  {init.probs().begin(), init.probs().end()}, options);
}

RDPoint solve_rd_semantic(const Source& source, const SemanticChannel& constraint, double s,
                          const SolverOptions& options) {
  return solve_rd_semantic(source, constraint, s, LabelDistribution::uniform(constraint.cols()),
                           options);
}

RDPoint solve_rd_semantic(const Source& source, const DistortionMatrix& distortion, double s,
                          const SolverOptions& options) {
  detail::require_same_size(source.size(), distortion.rows(), "solve_rd_semantic");
  const std::vector<double> uniform(distortion.cols(),
                                    1.0 / static_cast<double>(distortion.cols()));
  return rd_solve(source, log_truth_from_distortion(distortion), s, uniform, options);
}

RDPoint solve_rd_for_distortion(const Source& source, const DistortionMatrix& distortion,
                                double target, const SolverOptions& options) {
  detail::require_same_size(source.size(), distortion.rows(), "solve_rd_for_distortion");
  require_arg(std::isfinite(target) && target >= 0.0, "target distortion must be >= 0");
  const Matrix log_t = log_truth_from_distortion(distortion);
  const std::vector<double> uniform(distortion.cols(),
                                    1.0 / static_cast<double>(distortion.cols()));
  auto at = [&](double s) { return rd_solve(source, log_t, s, uniform, options); };

  RDPoint flat = at(0.0);
  if (target >= flat.D) return flat;

  double lo = 0.0, hi = 1.0;
  RDPoint hi_pt = at(hi);
  while (hi_pt.D > target) {
    require_arg(hi < 1e6, "target distortion is below the smallest attainable distortion");
    lo = hi;
    hi *= 2.0;
    hi_pt = at(hi);
  }
  RDPoint best = hi_pt;
  for (int k = 0; k < 200 && hi - lo > 1e-12 * hi; ++k) {
    const double mid = 0.5 * (lo + hi);
    RDPoint pt = at(mid);
    if (pt.D > target) {
      lo = mid;
    } else {
      hi = mid;
      best = std::move(pt);
    }
    if (std::abs(best.D - target) <= 1e-13) break;
  }
  return best;
}

}  // namespace semg
