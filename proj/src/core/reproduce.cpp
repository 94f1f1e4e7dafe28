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

#include "semg/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "semg/errors.hpp"
#include "semg/fixtures.hpp"
#include "semg/goal_control.hpp"
#include "semg/info_measures.hpp"
#include "semg/io/csv.hpp"
#include "semg/max_mi_classify.hpp"
#include "semg/mixture_latent.hpp"
#include "semg/rate_solvers.hpp"

namespace semg {

namespace {

using io::CsvWriter;
using io::format_double;

std::string flag(bool b) { return b ? "1" : "0"; }

void not_converged(ReproduceResult& out, const std::string& what) {
  out.warnings.push_back("NotConverged: " + what);
}

io::LabeledMatrix labeled(const Matrix& m, const std::string& corner, const std::string& row_prefix,
                          const std::string& col_prefix) {
  io::LabeledMatrix out;
  out.corner = corner;
  for (std::size_t i = 0; i < m.rows(); ++i) out.row_ids.push_back(row_prefix + std::to_string(i));
  for (std::size_t j = 0; j < m.cols(); ++j) out.col_ids.push_back(col_prefix + std::to_string(j));
  out.values.assign(m.data().begin(), m.data().end());
  return out;
}

// R at the middle point minus the chord through its neighbours, negated so
// that convex curves give nonnegative values.
double min_convexity_residual(const std::vector<RGPoint>& pts) {
  double worst = HUGE_VAL;
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    const auto &a = pts[k - 1], &b = pts[k], &c = pts[k + 1];
    const double span = c.G - a.G;
    if (span <= 1e-12) continue;
    const double chord = a.R + (c.R - a.R) * (b.G - a.G) / span;
    worst = std::min(worst, chord - b.R);
  }
  return worst;
}

ReproduceResult fig6() {
  ReproduceResult out;
  const auto f = fixtures::binary_communication();
  const auto curve = solve_rg_curve(f.source, f.sem, f.s_grid);
  CsvWriter w({"s", "R", "G", "iterations", "converged", "matched"});
  double r1 = 0, g1 = 0, max_ratio = 0, min_row_max = 1;
  for (const auto& p : curve.points) {
    w.row({format_double(p.s), format_double(p.R), format_double(p.G),
           std::to_string(p.iterations), flag(p.converged), flag(p.s == 1.0)});
    if (!p.converged) not_converged(out, "s=" + format_double(p.s));
    if (p.s == 1.0) {
      r1 = p.R;
      g1 = p.G;
    }
    if (p.s > 0.0 && p.s <= 1.0 && p.R > 0.0) max_ratio = std::max(max_ratio, p.G / p.R);
    if (p.s >= kInfiniteSlope)
      for (std::size_t i = 0; i < p.channel.rows(); ++i) {
        const auto row = p.channel.matrix().row(i);
        min_row_max = std::min(min_row_max, *std::max_element(row.begin(), row.end()));
      }
  }
  out.files.push_back({"fig6_curve.csv", w.str()});
  out.metrics = {{"R_at_s1", r1},
                 {"G_at_s1", g1},
                 {"abs_R_minus_G_at_s1", std::abs(r1 - g1)},
                 {"min_convexity_residual", min_convexity_residual(curve.points)},
                 {"max_G_over_R_right_branch", max_ratio},
                 {"min_row_max_at_limit", min_row_max},
                 {"G_max", curve.points.back().G}};
  return out;
}

ReproduceResult fig8() {
  ReproduceResult out;
  const auto rep = gray_compression_demo(GrayDemoConfig{});
  out.files.push_back({"fig8_truth_functions.csv",
                       io::write_labeled_matrix(labeled(rep.sem.matrix(), "gray", "", "y"))});
  out.files.push_back({"fig8_channel_s1.csv", io::write_labeled_matrix(labeled(
                                                  rep.point.channel.matrix(), "gray", "", "y"))});
  CsvWriter labels({"label", "center", "sigma", "P_y"});
  for (std::size_t j = 0; j < rep.centers.size(); ++j)
    labels.row({"y" + std::to_string(j), format_double(rep.centers[j]),
                format_double(rep.sigmas[j]), format_double(rep.point.label_dist[j])});
  out.files.push_back({"fig8_labels.csv", labels.str()});
  CsvWriter trace({"iteration", "R", "G"});
  for (const auto& t : rep.trace)
    trace.row({std::to_string(t.iteration), format_double(t.R), format_double(t.G)});
  out.files.push_back({"fig8_trace.csv", trace.str()});
  if (!rep.point.converged) not_converged(out, "s=1");
  out.metrics = {{"R", rep.point.R},
                 {"G", rep.point.G},
                 {"relative_gap", std::abs(rep.point.R - rep.point.G) / rep.point.R},
                 {"iterations", rep.point.iterations},
                 {"G_max", rep.limit.G},
                 {"R_at_G_max", rep.limit.R}};
  return out;
}

ReproduceResult fig9() {
  ReproduceResult out;
  const double L = 256.0;
  CsvWriter curve({"labels", "sigma0", "s", "R", "G", "converged"});
  const std::vector<double> slopes{1.0, 2.0, 5.0, kInfiniteSlope};
  auto run = [&](int labels, double sigma0, double s) {
    GrayDemoConfig c;
    c.n_labels = labels;
    c.sigma0 = sigma0;
    const auto rep = gray_truth_functions(c);
    const auto pt = solve_rg_point(rep.source, rep.sem, s);
    curve.row({std::to_string(labels), format_double(sigma0), format_double(s),
               format_double(pt.R), format_double(pt.G), flag(pt.converged)});
    return pt;
  };
  for (double div : {24.0, 48.0, 96.0}) {
    double gmax = 0.0;
    for (double s : slopes) gmax = run(63, L / div, s).G;
    out.metrics.push_back({"G_max_63_labels_sigma0_L_over_" + format_double(div), gmax});
  }
  for (int labels : {8, 16, 32}) {
    out.metrics.push_back({"G_max_" + std::to_string(labels) + "_labels_sigma0_L_over_96",
                           run(labels, L / 96.0, kInfiniteSlope).G});
  }
  out.files.push_back({"fig9_curves.csv", curve.str()});
  return out;
}

void control_columns(const fixtures::TwoTargetControl& f, const ControlSolution& sol,
                     const NormalProjection& proj, std::vector<std::vector<double>>& cols,
                     std::vector<std::string>& names, const std::string& tag) {
  for (std::size_t j = 0; j < sol.result_dists.size(); ++j) {
    names.push_back(tag + "_P_x_given_a" + std::to_string(j));
    cols.push_back(sol.result_dists[j]);
    names.push_back(tag + "_normal_a" + std::to_string(j));
    cols.push_back(proj.result_dists[j]);
  }
  (void)f;
}

ReproduceResult fig11() {
  ReproduceResult out;
  const auto f = fixtures::two_target_control();
  std::vector<std::string> names{"x", "baseline", "T0", "T1"};
  std::vector<std::vector<double>> cols{f.values,
                                        {f.problem.baseline.probs().begin(), f.problem.baseline.probs().end()},
                                        f.problem.targets.column(0), f.problem.targets.column(1)};
  for (double s : {1.0, 5.0}) {
    auto problem = f.problem;
    problem.s = s;
    const auto sol = solve_control(problem);
    const auto proj = project_to_normal(sol, problem, f.values);
    if (!sol.converged) not_converged(out, "s=" + format_double(s));
    const std::string tag = "s" + format_double(s);
    control_columns(f, sol, proj, cols, names, tag);
    out.metrics.push_back({tag + "_R", sol.R});
    out.metrics.push_back({tag + "_G", sol.G});
    out.metrics.push_back({tag + "_efficiency", sol.G / sol.R});
    out.metrics.push_back({tag + "_P_a0", sol.action_dist[0]});
    out.metrics.push_back({tag + "_normal_delta_G", proj.delta_G});
    out.metrics.push_back({tag + "_normal_delta_efficiency", proj.delta_efficiency});
  }
  CsvWriter w(names);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    std::vector<double> row;
    for (const auto& c : cols) row.push_back(c[i]);
    w.row(row);
  }
  out.files.push_back({"fig11_distributions.csv", w.str()});
  return out;
}

ReproduceResult fig12() {
  ReproduceResult out;
  const auto f = fixtures::two_target_control();
  CsvWriter w({"s", "R", "G", "efficiency", "normal_R", "normal_G", "iterations", "converged"});
  for (double s : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 40.0}) {
    auto problem = f.problem;
    problem.s = s;
    const auto sol = solve_control(problem);
    const auto proj = project_to_normal(sol, problem, f.values);
    if (!sol.converged) not_converged(out, "s=" + format_double(s));
    w.row({format_double(s), format_double(sol.R), format_double(sol.G),
           format_double(sol.G / sol.R), format_double(proj.R), format_double(proj.G),
           std::to_string(sol.iterations), flag(sol.converged)});
    if (s == 1.0 || s == 5.0 || s == 40.0) {
      out.metrics.push_back({"G_at_s" + format_double(s), sol.G});
      out.metrics.push_back({"R_at_s" + format_double(s), sol.R});
    }
  }
  out.files.push_back({"fig12_curve.csv", w.str()});
  return out;
}

ReproduceResult fig16() {
  ReproduceResult out;
  const auto f = fixtures::two_gaussian_classification();
  const auto res = classify_iterate(f.obs, f.init, 50);
  std::vector<std::string> names{"z"};
  for (std::size_t r = 0; r < res.history.size(); ++r) names.push_back("round" + std::to_string(r));
  CsvWriter parts(names);
  for (std::size_t k = 0; k < f.z_values.size(); ++k) {
    std::vector<double> row{f.z_values[k]};
    for (const auto& p : res.history) row.push_back(static_cast<double>(p.assignment[k]));
    parts.row(row);
  }
  out.files.push_back({"fig16_partitions.csv", parts.str()});
  CsvWriter mi({"round", "mi"});
  for (std::size_t r = 0; r < res.mi_trace.size(); ++r)
    mi.row({std::to_string(r), format_double(res.mi_trace[r])});
  out.files.push_back({"fig16_mi.csv", mi.str()});
  if (res.cycle_detected) out.warnings.push_back("CycleDetected");
  if (res.monotone_violation) out.warnings.push_back("MonotoneViolation");
  if (!res.converged) not_converged(out, "classification");
  std::size_t boundary = 0;
  while (boundary < res.partition.assignment.size() && res.partition.assignment[boundary] == 0)
    ++boundary;
  out.metrics = {{"rounds", res.rounds},
                 {"initial_mi", res.mi_trace.front()},
                 {"final_mi", res.mi_trace.back()},
                 {"first_z_in_class_1", static_cast<double>(boundary)}};
  return out;
}

std::string enm_trace_csv(const EnmResult& r) {
  CsvWriter w({"iter", "R", "G", "Rpp", "KL_P_Ptheta", "KL_PY", "Q", "Fprime", "F", "w0", "w1"});
  for (const auto& t : r.trace)
    w.row({std::to_string(t.iteration), format_double(t.R), format_double(t.G),
           format_double(t.Rpp), format_double(t.kl_data_model), format_double(t.kl_labels),
           format_double(t.Q), format_double(t.Fprime), format_double(t.F),
           format_double(t.weights[0]), format_double(t.weights[1])});
  return w.str();
}

ReproduceResult fig17() {
  ReproduceResult out;
  const auto main = fixtures::two_gaussian_mixture();
  const auto fit = enm_fit(main.data, main.grid, main.init);
  out.files.push_back({"fig17_trace.csv", enm_trace_csv(fit)});
  if (!fit.converged) not_converged(out, "EnM fit");
  const auto narrow = fixtures::narrow_start_mixture();
  const auto counter = enm_fit(narrow.data, narrow.grid, narrow.init);
  out.files.push_back({"fig17_counterexample_trace.csv", enm_trace_csv(counter)});
  if (!counter.converged) not_converged(out, "counterexample fit");
  const auto& last = fit.trace.back();
  out.metrics = {{"outer_iterations", fit.outer_iterations},
                 {"final_KL_P_Ptheta", last.kl_data_model},
                 {"weight0", fit.model.weights[0]},
                 {"weight1", fit.model.weights[1]},
                 {"mean0", fit.model.components[0].mean},
                 {"mean1", fit.model.components[1].mean},
                 {"counterexample_F_first", counter.trace.front().F},
                 {"counterexample_F_last", counter.trace.back().F},
                 {"counterexample_R_minus_G_first", counter.trace.front().R - counter.trace.front().G},
                 {"counterexample_R_minus_G_last", counter.trace.back().R - counter.trace.back().G}};
  return out;
}

const std::map<std::string, ReproduceResult (*)()>& registry() {
  static const std::map<std::string, ReproduceResult (*)()> r{
      {"fig6", fig6},   {"fig8", fig8},   {"fig9", fig9},  {"fig11", fig11},
      {"fig12", fig12}, {"fig16", fig16}, {"fig17", fig17}};
  return r;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig6", "fig8", "fig9", "fig11", "fig12", "fig16", "fig17"};
  return ids;
}

ReproduceResult reproduce(const std::string& figure) {
  const auto it = registry().find(figure);
  if (it == registry().end()) throw Error(ErrorCode::unknown_figure, "unknown figure id '" + figure + "'");
  ReproduceResult out = it->second();
  out.figure = figure;
  return out;
}

}  // namespace semg
