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

#include "semg/semg.h"

#include <cmath>
#include <algorithm>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "semg/config.hpp"
#include "semg/confirmation.hpp"
#include "semg/errors.hpp"
#include "semg/goal_control.hpp"
#include "semg/info_measures.hpp"
#include "semg/max_mi_classify.hpp"
#include "semg/mixture_latent.hpp"
#include "semg/portfolio_value.hpp"
#include "semg/prob_core.hpp"
#include "semg/rate_solvers.hpp"
#include "semg/reproduce.hpp"
#include "semg/truth_learning.hpp"

#ifndef SEMG_VERSION_STRING
#define SEMG_VERSION_STRING "0.0.0"
#endif

struct semg_rg_curve {
  semg::RGCurve curve;
};

struct semg_gray_demo {
  semg::GrayDemoReport report;
};

struct semg_enm_fit {
  semg::EnmResult result;
};

struct semg_maxmi_result {
  semg::ClassifyResult result;
};

struct semg_artifacts {
  semg::ReproduceResult result;
};

namespace {

thread_local std::string last_error;

semg_status status_of(semg::ErrorCode code) {
  using semg::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SEMG_ERR_INVALID_ARGUMENT;
    case ErrorCode::all_zero_overlap: return SEMG_ERR_ALL_ZERO_OVERLAP;
    case ErrorCode::domain_mismatch: return SEMG_ERR_DOMAIN_MISMATCH;
    case ErrorCode::non_positive_sigma: return SEMG_ERR_NON_POSITIVE_SIGMA;
    case ErrorCode::non_positive_logical_prob: return SEMG_ERR_NON_POSITIVE_LOGICAL_PROB;
    case ErrorCode::empty_label: return SEMG_ERR_EMPTY_LABEL;
    case ErrorCode::no_positive_truth: return SEMG_ERR_NO_POSITIVE_TRUTH;
    case ErrorCode::degenerate_row: return SEMG_ERR_DEGENERATE_ROW;
    case ErrorCode::zero_mixture_density: return SEMG_ERR_ZERO_MIXTURE_DENSITY;
    case ErrorCode::empty_component: return SEMG_ERR_EMPTY_COMPONENT;
    case ErrorCode::undefined_conditional: return SEMG_ERR_UNDEFINED_CONDITIONAL;
    case ErrorCode::unknown_figure: return SEMG_ERR_UNKNOWN_FIGURE;
  }
  return SEMG_ERR_INTERNAL;
}

semg_status fail(semg_status status, const std::string& message) {
  last_error = message;
  return status;
}

struct BadArgument {
  std::string message;
};

void need(bool ok, const char* message) {
  if (!ok) throw BadArgument{message};
}

template <class F>
semg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SEMG_OK;
  } catch (const BadArgument& e) {
    return fail(SEMG_ERR_INVALID_ARGUMENT, e.message);
  } catch (const semg::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEMG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEMG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SEMG_ERR_INTERNAL, "unknown failure");
  }
}

std::vector<double> vec(const double* p, std::size_t n) {
  need(p != nullptr || n == 0, "null input array");
  return std::vector<double>(p, p + n);
}

semg::Matrix mat(const double* p, std::size_t rows, std::size_t cols) {
  need(rows > 0 && cols > 0, "empty matrix");
  return semg::Matrix(rows, cols, vec(p, rows * cols));
}

void copy_out(std::span<const double> values, double* out) {
  if (out != nullptr) std::copy(values.begin(), values.end(), out);
}

semg::SolverOptions solver(const semg_solver_options* o, semg::SolverOptions fallback = {}) {
  if (o == nullptr) return fallback;
  need(o->tol > 0 && o->max_iter > 0, "solver tolerance and iteration cap must be positive");
  return {o->tol, o->max_iter};
}

semg::TruthFamily family_of(int family) {
  need(family == SEMG_FAMILY_GAUSSIAN || family == SEMG_FAMILY_TRAPEZOID, "unknown truth family");
  return family == SEMG_FAMILY_GAUSSIAN ? semg::TruthFamily::gaussian
                                        : semg::TruthFamily::trapezoid;
}

semg::ContingencyTable table(double a, double b, double c, double d) {
  semg::ContingencyTable t{a, b, c, d};
  t.validate();
  return t;
}

semg::BetSpec bet(double p, double r1, double r2, double r0) {
  semg::BetSpec b;
  b.win_prob = p;
  b.r1 = r1;
  b.r2 = r2;
  b.r0 = r0;
  b.validate();
  return b;
}

int flag(bool b) { return b ? 1 : 0; }

}  // namespace

extern "C" {

const char* semg_version(void) { return SEMG_VERSION_STRING; }

const char* semg_status_name(semg_status status) {
  switch (status) {
    case SEMG_OK: return "ok";
    case SEMG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SEMG_ERR_ALL_ZERO_OVERLAP: return "AllZeroOverlap";
    case SEMG_ERR_DOMAIN_MISMATCH: return "DomainMismatch";
    case SEMG_ERR_NON_POSITIVE_SIGMA: return "NonPositiveSigma";
    case SEMG_ERR_NON_POSITIVE_LOGICAL_PROB: return "NonPositiveLogicalProb";
    case SEMG_ERR_EMPTY_LABEL: return "EmptyLabel";
    case SEMG_ERR_NO_POSITIVE_TRUTH: return "NoPositiveTruth";
    case SEMG_ERR_DEGENERATE_ROW: return "DegenerateRow";
    case SEMG_ERR_ZERO_MIXTURE_DENSITY: return "ZeroMixtureDensity";
    case SEMG_ERR_EMPTY_COMPONENT: return "EmptyComponent";
    case SEMG_ERR_UNDEFINED_CONDITIONAL: return "UndefinedConditional";
    case SEMG_ERR_UNKNOWN_FIGURE: return "UnknownFigure";
    case SEMG_ERR_OUT_OF_RANGE: return "OutOfRange";
    case SEMG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* semg_last_error(void) { return last_error.c_str(); }

semg_status semg_set_log_base(int base) {
  if (base == SEMG_LOG_BITS) {
    semg::set_log_base(semg::LogBase::bits);
  } else if (base == SEMG_LOG_NATS) {
    semg::set_log_base(semg::LogBase::nats);
  } else {
    return fail(SEMG_ERR_INVALID_ARGUMENT, "log base must be SEMG_LOG_BITS or SEMG_LOG_NATS");
  }
  return SEMG_OK;
}

int semg_log_base(void) {
  return semg::log_base() == semg::LogBase::bits ? SEMG_LOG_BITS : SEMG_LOG_NATS;
}

semg_status semg_semantic_bayes(size_t n, const double* source, const double* truth,
                                double* posterior_out, double* logical_prob_out) {
  return guarded([&] {
    const semg::Source src(vec(source, n));
    const auto pred = semg::semantic_bayes(src, vec(truth, n));
    copy_out(pred.posterior, posterior_out);
    if (logical_prob_out != nullptr) *logical_prob_out = pred.logical_prob;
  });
}

semg_status semg_truth_from_likelihood(size_t n, const double* source, const double* likelihood,
                                       double* truth_out) {
  return guarded([&] {
    const semg::Source src(vec(source, n));
    copy_out(semg::truth_from_likelihood(src, vec(likelihood, n)), truth_out);
  });
}

semg_status semg_shannon_mi(size_t n, size_t m, const double* source, const double* channel,
                            double* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    *out = semg::shannon_mi(semg::Source(vec(source, n)), semg::ShannonChannel(mat(channel, n, m)));
  });
}

semg_status semg_semantic_mi(size_t n, size_t m, const double* source, const double* channel,
                             const double* sem, semg_measure_report* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    const auto r = semg::semantic_mi(semg::Source(vec(source, n)),
                                     semg::ShannonChannel(mat(channel, n, m)),
                                     semg::SemanticChannel(mat(sem, n, m)));
    *out = {r.shannon_mi,    r.semantic_mi,
            r.semantic_entropy, r.fuzzy_entropy,
            r.semantic_posterior_entropy, r.residual_kl};
  });
}

semg_status semg_pointwise_g(double truth_value, double logical_prob, double* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    *out = semg::pointwise_g(truth_value, logical_prob);
  });
}

semg_status semg_lbi_direct(size_t n, size_t m, const double* source, const double* channel,
                            double* sem_out) {
  return guarded([&] {
    const auto sem = semg::lbi_direct(semg::Source(vec(source, n)),
                                      semg::ShannonChannel(mat(channel, n, m)));
    copy_out(sem.matrix().data(), sem_out);
  });
}

semg_status semg_lbi_parametric(size_t n, const double* cond, const double* source,
                                const double* values, int family, size_t n_points,
                                const double* points, double* params_out, double* score_out,
                                size_t* index_out) {
  return guarded([&] {
    semg::ParameterGrid grid;
    grid.family = family_of(family);
    const std::size_t arity = semg::family_arity(grid.family);
    need(n_points > 0, "empty parameter grid");
    const auto flat = vec(points, n_points * arity);
    for (std::size_t k = 0; k < n_points; ++k)
      grid.points.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(k * arity),
                               flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * arity));
    const auto fit = semg::lbi_parametric(vec(cond, n), semg::Source(vec(source, n)),
                                          vec(values, n), grid);
    copy_out(fit.params, params_out);
    if (score_out != nullptr) *score_out = fit.score;
    if (index_out != nullptr) *index_out = fit.index;
  });
}

semg_status semg_evaluate_family(size_t n, const double* values, int family, const double* params,
                                 double* truth_out) {
  return guarded([&] {
    const auto fam = family_of(family);
    copy_out(semg::evaluate_family(fam, vec(params, semg::family_arity(fam)), vec(values, n)),
             truth_out);
  });
}

semg_status semg_classify(size_t n, size_t m, const double* source, const double* sem,
                          int criterion, size_t* labels_out) {
  return guarded([&] {
    need(criterion == SEMG_CLASSIFY_MAX_INFORMATION || criterion == SEMG_CLASSIFY_MIN_DISTORTION,
         "unknown classification criterion");
    need(labels_out != nullptr, "null output");
    const semg::Source src(vec(source, n));
    const semg::SemanticChannel channel(mat(sem, n, m));
    const auto logical = semg::logical_probabilities(src, channel);
    const auto crit = criterion == SEMG_CLASSIFY_MAX_INFORMATION
                          ? semg::ClassifyCriterion::max_information
                          : semg::ClassifyCriterion::min_distortion;
    for (std::size_t i = 0; i < n; ++i)
      labels_out[i] = semg::classify_max_info(channel.matrix().row(i), logical, crit);
  });
}

semg_status semg_rg_curve_solve(size_t n, size_t m, const double* source, const double* sem,
                                size_t n_s, const double* s_grid,
                                const semg_solver_options* options, int warm_start, unsigned jobs,
                                semg_rg_curve** out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    need(n_s > 0, "empty slope grid");
    semg::CurveOptions opts;
    opts.solver = solver(options);
    opts.warm_start = warm_start != 0;
    opts.jobs = jobs == 0 ? 1 : jobs;
    auto handle = std::make_unique<semg_rg_curve>();
    handle->curve = semg::solve_rg_curve(semg::Source(vec(source, n)),
                                         semg::SemanticChannel(mat(sem, n, m)),
                                         vec(s_grid, n_s), opts);
    *out = handle.release();
  });
}

size_t semg_rg_curve_size(const semg_rg_curve* curve) {
  return curve == nullptr ? 0 : curve->curve.points.size();
}

semg_status semg_rg_curve_point(const semg_rg_curve* curve, size_t k, semg_rg_point_info* out) {
  if (curve == nullptr || out == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  if (k >= curve->curve.points.size()) return fail(SEMG_ERR_OUT_OF_RANGE, "point index");
  const auto& p = curve->curve.points[k];
  *out = {p.s, p.R, p.G, p.iterations, flag(p.converged)};
  return SEMG_OK;
}

semg_status semg_rg_curve_channel(const semg_rg_curve* curve, size_t k, double* channel_out,
                                  double* label_out) {
  if (curve == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  if (k >= curve->curve.points.size()) return fail(SEMG_ERR_OUT_OF_RANGE, "point index");
  const auto& p = curve->curve.points[k];
  copy_out(p.channel.matrix().data(), channel_out);
  copy_out(p.label_dist.probs(), label_out);
  return SEMG_OK;
}

void semg_rg_curve_free(semg_rg_curve* curve) { delete curve; }

semg_status semg_rd_solve(size_t n, size_t m, const double* source, const double* constraint,
                          int constraint_kind, int mode, double value,
                          const semg_solver_options* options, semg_rd_info* info,
                          double* channel_out, double* label_out) {
  return guarded([&] {
    need(constraint_kind == SEMG_CONSTRAINT_TRUTH || constraint_kind == SEMG_CONSTRAINT_DISTORTION,
         "unknown constraint kind");
    need(mode == SEMG_RD_AT_SLOPE || mode == SEMG_RD_AT_DISTORTION, "unknown solve mode");
    const semg::Source src(vec(source, n));
    const auto opts = solver(options);
    const auto raw = mat(constraint, n, m);
    const semg::DistortionMatrix dist =
        constraint_kind == SEMG_CONSTRAINT_DISTORTION
            ? semg::DistortionMatrix(raw)
            : semg::truth_to_distortion(semg::SemanticChannel(raw));
    semg::RDPoint p;
    if (mode == SEMG_RD_AT_SLOPE) {
      p = constraint_kind == SEMG_CONSTRAINT_TRUTH
              ? semg::solve_rd_semantic(src, semg::SemanticChannel(raw), value, opts)
              : semg::solve_rd_semantic(src, dist, value, opts);
    } else {
      p = semg::solve_rd_for_distortion(src, dist, value, opts);
    }
    if (info != nullptr) *info = {p.s, p.R, p.D, p.iterations, flag(p.converged)};
    copy_out(p.channel.matrix().data(), channel_out);
    copy_out(p.label_dist.probs(), label_out);
  });
}

semg_status semg_capacity(size_t n, size_t m, const double* sem, semg_capacity_info* info,
                          double* source_out, size_t* peaks_out) {
  return guarded([&] {
    const auto r = semg::semantic_channel_capacity(semg::SemanticChannel(mat(sem, n, m)));
    if (info != nullptr)
      *info = {r.capacity, r.point.R, flag(r.duplicate_peak), r.evaluations};
    copy_out(r.source.probs(), source_out);
    if (peaks_out != nullptr) std::copy(r.peaks.begin(), r.peaks.end(), peaks_out);
  });
}

void semg_gray_config_default(semg_gray_config* config) {
  if (config == nullptr) return;
  const semg::GrayDemoConfig d;
  config->levels = d.levels;
  config->n_labels = d.n_labels;
  config->family = SEMG_GRAY_GAUSSIAN;
  config->sigma0 = d.sigma0;
  config->beta = d.beta;
  config->s = d.s;
  config->tol = d.solver.tol;
  config->max_iter = d.solver.max_iter;
}

semg_status semg_gray_demo_run(const semg_gray_config* config, semg_gray_demo** out) {
  return guarded([&] {
    need(config != nullptr && out != nullptr, "null argument");
    need(config->family == SEMG_GRAY_GAUSSIAN || config->family == SEMG_GRAY_CRISP,
         "unknown gray family");
    semg::GrayDemoConfig c;
    c.levels = config->levels;
    c.n_labels = config->n_labels;
    c.family = config->family == SEMG_GRAY_GAUSSIAN ? semg::GrayFamily::gaussian
                                                    : semg::GrayFamily::crisp;
    c.sigma0 = config->sigma0;
    c.beta = config->beta;
    c.s = config->s;
    c.solver = {config->tol, config->max_iter};
    need(c.solver.tol > 0 && c.solver.max_iter > 0,
         "solver tolerance and iteration cap must be positive");
    auto handle = std::make_unique<semg_gray_demo>();
    handle->report = semg::gray_compression_demo(c);
    *out = handle.release();
  });
}

semg_status semg_gray_demo_summary(const semg_gray_demo* demo, semg_gray_summary* out) {
  if (demo == nullptr || out == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& r = demo->report;
  *out = {r.point.R,           r.point.G,         r.point.iterations, flag(r.point.converged),
          r.limit.G,           r.limit.R,         r.sem.rows(),       r.sem.cols(),
          r.trace.size()};
  return SEMG_OK;
}

semg_status semg_gray_demo_matrices(const semg_gray_demo* demo, double* truth_out,
                                    double* channel_out) {
  if (demo == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  copy_out(demo->report.sem.matrix().data(), truth_out);
  copy_out(demo->report.point.channel.matrix().data(), channel_out);
  return SEMG_OK;
}

semg_status semg_gray_demo_labels(const semg_gray_demo* demo, double* centers_out,
                                  double* sigmas_out, double* label_probs_out) {
  if (demo == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  copy_out(demo->report.centers, centers_out);
  copy_out(demo->report.sigmas, sigmas_out);
  copy_out(demo->report.point.label_dist.probs(), label_probs_out);
  return SEMG_OK;
}

semg_status semg_gray_demo_trace(const semg_gray_demo* demo, int* iteration_out, double* R_out,
                                 double* G_out) {
  if (demo == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& t = demo->report.trace;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (iteration_out != nullptr) iteration_out[k] = t[k].iteration;
    if (R_out != nullptr) R_out[k] = t[k].R;
    if (G_out != nullptr) G_out[k] = t[k].G;
  }
  return SEMG_OK;
}

void semg_gray_demo_free(semg_gray_demo* demo) { delete demo; }

semg_status semg_enm_run(size_t n_grid, const double* grid, const double* data, size_t n_comp,
                         const double* weights, const semg_component_spec* components,
                         int n_inner, double tol, int max_outer, semg_enm_fit** out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    need(n_grid > 0 && n_comp > 0, "empty grid or model");
    need(components != nullptr, "null component list");
    const auto support = vec(grid, n_grid);
    semg::MixtureModel init;
    init.weights = semg::LabelDistribution(vec(weights, n_comp));
    for (std::size_t j = 0; j < n_comp; ++j) {
      const auto& c = components[j];
      if (c.kind == SEMG_COMPONENT_GAUSSIAN) {
        init.components.push_back(semg::Component::gaussian(c.mean, c.sigma, support));
      } else {
        need(c.kind == SEMG_COMPONENT_TABLE, "unknown component kind");
        init.components.push_back(semg::Component::table(vec(c.probs, n_grid)));
      }
    }
    semg::EnmOptions opts;
    opts.n_inner = n_inner;
    opts.tol = tol;
    opts.max_outer = max_outer;
    need(n_inner >= 1 && tol > 0 && max_outer >= 1, "invalid EnM options");
    auto handle = std::make_unique<semg_enm_fit>();
    handle->result = semg::enm_fit(semg::Source(vec(data, n_grid)), support, init, opts);
    *out = handle.release();
  });
}

semg_status semg_enm_summary_get(const semg_enm_fit* fit, semg_enm_summary* out) {
  if (fit == nullptr || out == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& r = fit->result;
  *out = {r.outer_iterations, flag(r.converged), r.trace.size(), r.model.components.size(),
          r.model.grid_size()};
  return SEMG_OK;
}

semg_status semg_enm_trace_record(const semg_enm_fit* fit, size_t k, semg_enm_record* out,
                                  double* weights_out) {
  if (fit == nullptr || out == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  if (k >= fit->result.trace.size()) return fail(SEMG_ERR_OUT_OF_RANGE, "trace index");
  const auto& t = fit->result.trace[k];
  *out = {t.iteration, t.R, t.G, t.Rpp, t.kl_data_model, t.kl_labels, t.Q, t.Fprime, t.F};
  copy_out(t.weights, weights_out);
  return SEMG_OK;
}

semg_status semg_enm_model(const semg_enm_fit* fit, double* weights_out, int* kinds_out,
                           double* means_out, double* sigmas_out, double* probs_out) {
  if (fit == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& model = fit->result.model;
  copy_out(model.weights.probs(), weights_out);
  const std::size_t n = model.grid_size();
  for (std::size_t j = 0; j < model.components.size(); ++j) {
    const auto& c = model.components[j];
    if (kinds_out != nullptr)
      kinds_out[j] = c.kind == semg::ComponentKind::gaussian ? SEMG_COMPONENT_GAUSSIAN
                                                             : SEMG_COMPONENT_TABLE;
    if (means_out != nullptr) means_out[j] = c.mean;
    if (sigmas_out != nullptr) sigmas_out[j] = c.sigma;
    if (probs_out != nullptr) std::copy(c.probs.begin(), c.probs.end(), probs_out + j * n);
  }
  return SEMG_OK;
}

void semg_enm_free(semg_enm_fit* fit) { delete fit; }

semg_status semg_svb_solve(size_t n, size_t m, const double* data, const double* constraints,
                           int form, double s, const semg_solver_options* options,
                           semg_svb_info* info, double* label_out, double* channel_out) {
  return guarded([&] {
    need(form == SEMG_SVB_LIKELIHOOD || form == SEMG_SVB_TRUTH, "unknown constraint form");
    semg::SvbOptions opts;
    opts.s = s;
    opts.solver = solver(options, opts.solver);
    const auto r = semg::svb_solve(
        semg::Source(vec(data, n)), mat(constraints, n, m),
        form == SEMG_SVB_LIKELIHOOD ? semg::ConstraintForm::likelihood
                                    : semg::ConstraintForm::truth,
        opts);
    if (info != nullptr)
      *info = {r.F, r.posterior_entropy, r.kl_labels, r.R, r.G, r.iterations, flag(r.converged)};
    copy_out(r.label_dist.probs(), label_out);
    copy_out(r.channel.matrix().data(), channel_out);
  });
}

semg_status semg_control_solve(size_t n, size_t m, const double* baseline, const double* targets,
                               double s, const double* values,
                               const semg_solver_options* options, semg_control_info* info,
                               double* action_out, double* channel_out, double* results_out,
                               double* goal_info_out) {
  return guarded([&] {
    need(info != nullptr, "null output");
    semg::ControlProblem problem;
    problem.baseline = semg::Source(vec(baseline, n));
    problem.targets = semg::SemanticChannel(mat(targets, n, m));
    problem.s = s;
    const auto sol = semg::solve_control(problem, solver(options));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    *info = {sol.R, sol.G, sol.iterations, flag(sol.converged), nan, nan};
    if (values != nullptr) {
      const auto proj = semg::project_to_normal(sol, problem, vec(values, n));
      info->normal_R = proj.R;
      info->normal_G = proj.G;
    }
    copy_out(sol.action_dist.probs(), action_out);
    copy_out(sol.action_channel.matrix().data(), channel_out);
    for (std::size_t j = 0; j < m; ++j) {
      if (results_out != nullptr) copy_out(sol.result_dists[j], results_out + j * n);
      if (goal_info_out != nullptr)
        goal_info_out[j] =
            semg::goal_info(sol.result_dists[j], problem.baseline, problem.targets.column(j));
    }
  });
}

semg_status semg_maxmi_classify(size_t n_x, size_t n_z, const double* source,
                                const double* z_given_x, const size_t* init, int max_iter,
                                semg_maxmi_result** out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    need(init != nullptr, "null initial partition");
    need(max_iter >= 1, "iteration cap must be positive");
    const semg::ObservationModel obs(semg::Source(vec(source, n_x)),
                                     semg::ShannonChannel(mat(z_given_x, n_x, n_z)));
    semg::Partition start;
    start.assignment.assign(init, init + n_z);
    auto handle = std::make_unique<semg_maxmi_result>();
    handle->result = semg::classify_iterate(obs, start, max_iter);
    *out = handle.release();
  });
}

semg_status semg_maxmi_summary_get(const semg_maxmi_result* r, semg_maxmi_summary* out) {
  if (r == nullptr || out == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& c = r->result;
  *out = {c.rounds,
          flag(c.converged),
          flag(c.cycle_detected),
          flag(c.dropped_empty),
          flag(c.monotone_violation),
          c.mi_trace.size()};
  return SEMG_OK;
}

semg_status semg_maxmi_partition(const semg_maxmi_result* r, size_t* assignment_out) {
  if (r == nullptr || assignment_out == nullptr)
    return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& a = r->result.partition.assignment;
  std::copy(a.begin(), a.end(), assignment_out);
  return SEMG_OK;
}

semg_status semg_maxmi_trace(const semg_maxmi_result* r, double* mi_out) {
  if (r == nullptr) return fail(SEMG_ERR_INVALID_ARGUMENT, "null argument");
  copy_out(r->result.mi_trace, mi_out);
  return SEMG_OK;
}

void semg_maxmi_free(semg_maxmi_result* r) { delete r; }

semg_status semg_confirmation(double a, double b, double c, double d, int measure, double* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    const auto t = table(a, b, c, d);
    switch (measure) {
      case SEMG_MEASURE_B1: *out = semg::channel_confirmation(t); break;
      case SEMG_MEASURE_C1: *out = semg::prediction_confirmation(t); break;
      case SEMG_MEASURE_PD: *out = semg::causal_probability(t); break;
      case SEMG_MEASURE_CC: *out = semg::causal_confirmation(t); break;
      default: throw BadArgument{"unknown confirmation measure"};
    }
  });
}

semg_status semg_predict_with_confirmation(double degree, const double* base2,
                                           double* posterior2_out) {
  return guarded([&] {
    copy_out(semg::predict_with_confirmation(degree, semg::Source(vec(base2, 2))),
             posterior2_out);
  });
}

semg_status semg_kelly(double win_prob, double r1, double r2, double r0, double* q_out,
                       int* no_edge_out) {
  return guarded([&] {
    const auto k = semg::kelly_optimal(bet(win_prob, r1, r2, r0));
    if (q_out != nullptr) *q_out = k.q;
    if (no_edge_out != nullptr) *no_edge_out = flag(k.no_edge);
  });
}

semg_status semg_bet_growth(double win_prob, double r1, double r2, double r0, double q,
                            double* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    *out = semg::bet_growth(bet(win_prob, r1, r2, r0), q);
  });
}

semg_status semg_investment_capacity_get(double win_prob, double r1, double r2, double r0,
                                         semg_investment_capacity* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    const auto c = semg::investment_capacity(bet(win_prob, r1, r2, r0));
    *out = {c.exact,        c.q_star,      flag(c.no_edge), c.full_bet_risk,
            c.edge_to_risk, c.closed_form, c.approximation};
  });
}

semg_status semg_growth_entropy(size_t w, size_t k, const double* probs, const double* returns,
                                const double* ratios, double* growth_out,
                                semg_risk_measures* risk_out) {
  return guarded([&] {
    semg::PortfolioSpec spec;
    spec.probs = vec(probs, w);
    spec.returns = mat(returns, w, k);
    spec.ratios = vec(ratios, k);
    spec.validate();
    if (growth_out != nullptr) *growth_out = semg::growth_entropy(spec);
    if (risk_out != nullptr) {
      const auto r = semg::risk_measures(spec);
      *risk_out = {r.arithmetic, r.geometric, r.risk, r.sin_alpha};
    }
  });
}

semg_status semg_optimal_ratios(size_t w, size_t k, const double* probs, const double* returns,
                                double* ratios_out) {
  return guarded([&] {
    copy_out(semg::optimal_ratios(vec(probs, w), mat(returns, w, k)), ratios_out);
  });
}

semg_status semg_information_value(size_t w, size_t k, const double* prior, const double* pred,
                                   const double* realized, const double* returns,
                                   double* value_out, double* q_prior_out, double* q_post_out,
                                   double* pointwise_out) {
  return guarded([&] {
    const auto v = semg::information_value(vec(prior, w), vec(pred, w), vec(realized, w),
                                           mat(returns, w, k));
    if (value_out != nullptr) *value_out = v.value;
    copy_out(v.q_prior, q_prior_out);
    copy_out(v.q_posterior, q_post_out);
    copy_out(v.pointwise, pointwise_out);
  });
}

semg_status semg_arrow_value(size_t w, const double* probs, double* out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    *out = semg::arrow_value(vec(probs, w));
  });
}

size_t semg_figure_count(void) { return semg::figure_ids().size(); }

const char* semg_figure_id(size_t k) {
  const auto& ids = semg::figure_ids();
  return k < ids.size() ? ids[k].c_str() : nullptr;
}

semg_status semg_reproduce(const char* figure, semg_artifacts** out) {
  return guarded([&] {
    need(figure != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<semg_artifacts>();
    handle->result = semg::reproduce(figure);
    *out = handle.release();
  });
}

size_t semg_artifacts_file_count(const semg_artifacts* a) {
  return a == nullptr ? 0 : a->result.files.size();
}

const char* semg_artifacts_file_name(const semg_artifacts* a, size_t k) {
  if (a == nullptr || k >= a->result.files.size()) return nullptr;
  return a->result.files[k].name.c_str();
}

const char* semg_artifacts_file_content(const semg_artifacts* a, size_t k, size_t* length_out) {
  if (a == nullptr || k >= a->result.files.size()) return nullptr;
  const auto& content = a->result.files[k].content;
  if (length_out != nullptr) *length_out = content.size();
  return content.c_str();
}

size_t semg_artifacts_metric_count(const semg_artifacts* a) {
  return a == nullptr ? 0 : a->result.metrics.size();
}

const char* semg_artifacts_metric_name(const semg_artifacts* a, size_t k) {
  if (a == nullptr || k >= a->result.metrics.size()) return nullptr;
  return a->result.metrics[k].first.c_str();
}

double semg_artifacts_metric_value(const semg_artifacts* a, size_t k) {
  if (a == nullptr || k >= a->result.metrics.size())
    return std::numeric_limits<double>::quiet_NaN();
  return a->result.metrics[k].second;
}

size_t semg_artifacts_warning_count(const semg_artifacts* a) {
  return a == nullptr ? 0 : a->result.warnings.size();
}

const char* semg_artifacts_warning(const semg_artifacts* a, size_t k) {
  if (a == nullptr || k >= a->result.warnings.size()) return nullptr;
  return a->result.warnings[k].c_str();
}

void semg_artifacts_free(semg_artifacts* a) { delete a; }

}  // extern "C"
