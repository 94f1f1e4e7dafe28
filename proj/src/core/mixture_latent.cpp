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

#include "semg/mixture_latent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/mid_engine.hpp"
#include "core/numeric.hpp"
#include "semg/info_measures.hpp"

namespace semg {

using detail::negligible;
using detail::require;
using detail::require_arg;

Component Component::gaussian(double mean, double sigma, std::span<const double> grid) {
  require(sigma > 0.0 && std::isfinite(sigma), ErrorCode::non_positive_sigma,
          "Gaussian component sigma must be positive");
  require_arg(std::isfinite(mean), "Gaussian component mean must be finite");
  require_arg(!grid.empty(), "Gaussian component: empty grid");
  Component c;
  c.kind = ComponentKind::gaussian;
  c.mean = mean;
  c.sigma = sigma;
  // Shift exponents by their minimum so that far-away means do not underflow.
  std::vector<double> e(grid.size());
  double lo = HUGE_VAL;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double z = (grid[i] - mean) / sigma;
    e[i] = 0.5 * z * z;
    lo = std::min(lo, e[i]);
  }
  double sum = 0.0;
  for (double& v : e) {
    v = std::exp(lo - v);
    sum += v;
  }
  for (double& v : e) v /= sum;
  c.probs = std::move(e);
  return c;
}

Component Component::table(std::vector<double> probs) {
  detail::check_probability_vector(probs, "mixture component");
  Component c;
  c.kind = ComponentKind::table;
  c.probs = std::move(probs);
  return c;
}

std::size_t MixtureModel::grid_size() const {
  return components.empty() ? 0 : components.front().probs.size();
}

void MixtureModel::validate(std::size_t n) const {
  require_arg(!components.empty(), "mixture model: no components");
  detail::require_same_size(weights.size(), components.size(), "mixture model weights");
  for (const auto& c : components) {
    detail::require_same_size(c.probs.size(), n, "mixture component grid");
    detail::check_probability_vector(c.probs, "mixture component");
  }
}

std::vector<double> MixtureModel::density() const {
  std::vector<double> out(grid_size(), 0.0);
  for (std::size_t j = 0; j < components.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[j] * components[j].probs[i];
  return out;
}

namespace {

std::vector<std::vector<double>> likelihoods_of(const MixtureModel& model) {
  std::vector<std::vector<double>> out;
  out.reserve(model.components.size());
  for (const auto& c : model.components) out.push_back(c.probs);
  return out;
}

Matrix responsibilities(const Source& data, std::span<const double> weights,
                        const std::vector<std::vector<double>>& lik) {
  const std::size_t n = data.size(), m = weights.size();
  Matrix r(n, m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double dens = 0.0;
    for (std::size_t j = 0; j < m; ++j) dens += weights[j] * lik[j][i];
    if (dens <= 0.0) {
      require(data[i] <= 0.0, ErrorCode::zero_mixture_density,
              "mixture density is zero at grid point " + std::to_string(i));
      for (std::size_t j = 0; j < m; ++j) r(i, j) = weights[j];
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) r(i, j) = weights[j] * lik[j][i] / dens;
  }
  return r;
}

}  // namespace

ShannonChannel em_e_step(const Source& data, const LabelDistribution& weights,
                         const std::vector<std::vector<double>>& likelihoods) {
  detail::require_same_size(weights.size(), likelihoods.size(), "E-step components");
  for (const auto& l : likelihoods) detail::require_same_size(l.size(), data.size(), "E-step grid");
  return ShannonChannel(responsibilities(data, weights.probs(), likelihoods));
}

ShannonChannel em_e_step(const Source& data, const MixtureModel& model) {
  model.validate(data.size());
  return em_e_step(data, model.weights, likelihoods_of(model));
}

LabelDistribution em_m1_step(const Source& data, const ShannonChannel& resp) {
  return output_distribution(data, resp);
}

std::vector<Component> em_m2_step(const Source& data, const ShannonChannel& resp,
                                  const LabelDistribution& new_weights,
                                  const std::vector<Component>& current,
                                  std::span<const double> grid) {
  detail::require_same_size(data.size(), resp.rows(), "M2-step grid");
  detail::require_same_size(resp.cols(), new_weights.size(), "M2-step labels");
  detail::require_same_size(resp.cols(), current.size(), "M2-step components");
  std::vector<Component> out;
  out.reserve(current.size());
  for (std::size_t j = 0; j < resp.cols(); ++j) {
    require(new_weights[j] > 0.0, ErrorCode::empty_component,
            "component " + std::to_string(j) + " has zero weight");
    std::vector<double> raw(data.size());
    double mass = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i] = data[i] * resp(i, j);
      mass += raw[i];
    }
    require(mass > 0.0, ErrorCode::empty_component,
            "component " + std::to_string(j) + " receives no data");
    for (double& v : raw) v /= mass;
    if (current[j].kind == ComponentKind::table) {
      out.push_back(Component::table(std::move(raw)));
      continue;
    }
    detail::require_same_size(grid.size(), raw.size(), "M2-step Gaussian grid");
    double mean = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) mean += raw[i] * grid[i];
    double var = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) var += raw[i] * (grid[i] - mean) * (grid[i] - mean);
    require(var > 0.0, ErrorCode::non_positive_sigma,
            "component " + std::to_string(j) + " collapsed onto a single grid point");
    out.push_back(Component::gaussian(mean, std::sqrt(var), grid));
  }
  return out;
}

namespace {

EnmTraceRecord diagnostics(int iteration, const Source& data, const MixtureModel& model,
                           const Matrix& resp) {
  const std::size_t n = data.size(), m = model.components.size();
  const auto w = model.weights.probs();
  const auto w_plus = detail::channel_marginal(data, resp);
  const auto dens = model.density();

  EnmTraceRecord rec;
  rec.iteration = iteration;
  rec.weights.assign(w.begin(), w.end());
  double r = 0.0, g = 0.0, rpp = 0.0, q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (negligible(data[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const double wt = data[i] * resp(i, j);
      if (negligible(wt)) continue;
      const double lik = model.components[j].probs[i];
      r += wt * std::log(resp(i, j) / w_plus[j]);
      g += wt * std::log(lik / data[i]);
      rpp += wt * std::log(lik / dens[i]);
      q += wt * std::log(w[j] * lik);
    }
  }
  double f = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    for (double p : model.components[j].probs)
      if (!negligible(p)) f -= w[j] * p * std::log(p);
  rec.R = to_units(r);
  rec.G = to_units(g);
  rec.Rpp = to_units(rpp);
  rec.Q = to_units(q);
  rec.F = to_units(f);
  rec.Fprime = entropy(w) + rec.Q;
  rec.kl_data_model = kl_divergence(data.probs(), dens);
  rec.kl_labels = kl_divergence(w_plus, w);
  return rec;
}

}  // namespace

EnmResult enm_fit(const Source& data, std::span<const double> grid, const MixtureModel& init,
                  const EnmOptions& options) {
  require_arg(options.n_inner >= 1, "n_inner must be at least 1");
  require_arg(options.tol > 0.0, "tolerance must be positive");
  require_arg(options.max_outer >= 0, "max_outer must be >= 0");
  init.validate(data.size());
  detail::require_same_size(grid.size(), data.size(), "EnM grid");

  EnmResult result;
  MixtureModel model = init;
  for (int outer = 0;; ++outer) {
    auto lik = likelihoods_of(model);
    Matrix resp = responsibilities(data, model.weights.probs(), lik);
    result.trace.push_back(diagnostics(outer, data, model, resp));
    result.outer_iterations = outer;
    if (result.trace.back().kl_data_model < options.tol) {
      result.converged = true;
      break;
    }
    if (outer == options.max_outer) break;

    std::vector<double> w = detail::channel_marginal(data, resp);
    for (int k = 1; k < options.n_inner; ++k) {
      resp = responsibilities(data, w, lik);
      w = detail::channel_marginal(data, resp);
    }
    LabelDistribution new_weights(model.weights.ids(), w);
    model.components = em_m2_step(data, ShannonChannel(std::move(resp)), new_weights,
                                  model.components, grid);
    model.weights = std::move(new_weights);
  }
  result.model = std::move(model);
  return result;
}

SvbResult svb_solve(const Source& data, const Matrix& constraints, ConstraintForm form,
                    const SvbOptions& options) {
  return svb_solve(data, constraints, form, LabelDistribution::uniform(constraints.cols()),
                   options);
}

SvbResult svb_solve(const Source& data, const Matrix& constraints, ConstraintForm form,
                    const LabelDistribution& init, const SvbOptions& options) {
  detail::require_same_size(data.size(), constraints.rows(), "SVB constraints");
  detail::require_same_size(init.size(), constraints.cols(), "SVB initial labels");
  const std::size_t n = data.size(), m = constraints.cols();

  Matrix log_m(n, m);
  if (form == ConstraintForm::truth) {
    log_m = detail::log_information_ratios(data, SemanticChannel(constraints));
  } else {
    for (std::size_t j = 0; j < m; ++j)
      detail::check_probability_vector(constraints.column(j), "SVB likelihood constraint");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double l = detail::safe_log(constraints(i, j));
        log_m(i, j) = data[i] > 0.0 ? l - std::log(data[i]) : l;
      }
  }

  auto run = detail::run_mid(data, log_m, options.s, {init.probs().begin(), init.probs().end()},
                             options.solver);
  SvbResult out;
  out.iterations = run.iterations;
  out.converged = run.converged;
  const auto p_plus = detail::channel_marginal(data, run.channel);
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (negligible(data[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const double w = data[i] * run.channel(i, j);
      if (negligible(w)) continue;
      h -= w * (std::log(data[i]) + log_m(i, j));
    }
  }
  out.posterior_entropy = to_units(h);
  out.kl_labels = kl_divergence(p_plus, run.label_probs);
  out.F = out.posterior_entropy + out.kl_labels;
  out.R = to_units(detail::shannon_mi_nats(data, run.channel));
  out.G = to_units(detail::channel_average(data, run.channel, log_m));
  out.label_dist = init.with_probs(p_plus);
  out.channel = ShannonChannel(std::move(run.channel));
  return out;
}

}  // namespace semg
