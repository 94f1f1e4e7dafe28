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

// rg-curve, rd-solve, capacity, compress-gray, lbi, classify.

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace semg_cli {

namespace {

namespace io = semg::io;

struct SourceAndSem {
  io::LabeledVector source;
  io::LabeledMatrix sem;
};

// Matrix rows must list the source instances in the same order.
void require_same_instances(const io::LabeledVector& source, const io::LabeledMatrix& m,
                            const std::string& path) {
  if (m.row_ids != source.ids)
    throw InputError(path + ": DomainMismatch: row identifiers differ from the source");
}

SourceAndSem load(const std::string& source_path, const std::string& matrix_path) {
  SourceAndSem out{read_vector(source_path), read_matrix(matrix_path)};
  require_same_instances(out.source, out.sem, matrix_path);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
};

std::vector<double> posterior_column(const std::vector<double>& source,
                                     const io::LabeledMatrix& channel, std::size_t j) {
  std::vector<double> cond(source.size());
  double mass = 0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    cond[i] = source[i] * channel.at(i, j);
    mass += cond[i];
  }
  if (mass <= 0) throw InputError("EmptyLabel: label '" + channel.col_ids[j] + "' is never used");
  for (double& c : cond) c /= mass;
  return cond;
}

// --- rg-curve -------------------------------------------------------------

struct RgCurveCmd {
  std::string source, sem, s_grid = "0.25:4:0.25", out, json;
  bool no_warm_start = false, dump_channels = false;
  unsigned jobs = 1;
  SolverFlags solver;

  int run(CLI::App& sub) const {
    Run r("rg-curve");
    const auto in = load(source, sem);
    const auto grid = io::parse_number_list(s_grid, "--s-grid");
    const auto opts = solver.options();
    Handle<semg_rg_curve, semg_rg_curve_free> curve;
    check(semg_rg_curve_solve(in.sem.rows(), in.sem.cols(), in.source.values.data(),
                              in.sem.values.data(), grid.size(), grid.data(), &opts,
                              no_warm_start ? 0 : 1, jobs, &curve.ptr),
          "rg-curve");
    io::CsvWriter w({"s", "R", "G", "iterations", "converged"});
    Json points = Json::array();
    std::size_t converged = 0;
    const std::size_t n = semg_rg_curve_size(curve.ptr);
    for (std::size_t k = 0; k < n; ++k) {
      semg_rg_point_info p;
      check(semg_rg_curve_point(curve.ptr, k, &p), "rg-curve");
      w.row(std::vector<std::string>{io::format_double(p.s), io::format_double(p.R),
                                     io::format_double(p.G), std::to_string(p.iterations),
                                     p.converged ? "1" : "0"});
      if (p.converged) {
        ++converged;
      } else {
        r.not_converged("s=" + io::format_double(p.s));
      }
      Json item{{"s", number(p.s)},
                {"R", number(p.R)},
                {"G", number(p.G)},
                {"iterations", p.iterations},
                {"converged", p.converged != 0}};
      if (dump_channels) {
        std::vector<double> channel(in.sem.rows() * in.sem.cols()), labels(in.sem.cols());
        check(semg_rg_curve_channel(curve.ptr, k, channel.data(), labels.data()), "rg-curve");
        item["label_dist"] = numbers(labels);
        Json rows = Json::array();
        for (std::size_t i = 0; i < in.sem.rows(); ++i)
          rows.push_back(numbers({channel.begin() + static_cast<std::ptrdiff_t>(i * in.sem.cols()),
                                  channel.begin() +
                                      static_cast<std::ptrdiff_t>((i + 1) * in.sem.cols())}));
        item["channel"] = rows;
      }
      points.push_back(item);
    }
    r.metrics()["points"] = n;
    r.metrics()["converged_points"] = converged;
    r.results()["curve"] = points;
    r.add_file(out, w.str());
    return r.commit(sub, json);
  }
};

// --- rd-solve -------------------------------------------------------------

struct RdSolveCmd {
  std::string source, sem, distortion, out, labels, json;
  double s = 1.0, target_d = 0.0;
  SolverFlags solver;

  int run(CLI::App& sub, bool at_slope) const {
    Run r("rd-solve");
    const bool use_truth = !sem.empty();
    const auto in = load(source, use_truth ? sem : distortion);
    const auto opts = solver.options();
    semg_rd_info info;
    std::vector<double> channel(in.sem.rows() * in.sem.cols()), label_dist(in.sem.cols());
    check(semg_rd_solve(in.sem.rows(), in.sem.cols(), in.source.values.data(),
                        in.sem.values.data(),
                        use_truth ? SEMG_CONSTRAINT_TRUTH : SEMG_CONSTRAINT_DISTORTION,
                        at_slope ? SEMG_RD_AT_SLOPE : SEMG_RD_AT_DISTORTION,
                        at_slope ? s : target_d, &opts, &info, channel.data(), label_dist.data()),
          "rd-solve");
    if (!info.converged) r.not_converged("s=" + io::format_double(info.s));
    r.metrics()["s"] = number(info.s);
    r.metrics()["R"] = number(info.R);
    r.metrics()["D"] = number(info.D);
    r.metrics()["iterations"] = info.iterations;
    r.metrics()["converged"] = info.converged != 0;
    r.results()["label_dist"] = numbers(label_dist);
    r.add_file(out, matrix_csv(in.sem.corner, in.sem.row_ids, in.sem.col_ids, channel));
    r.add_file(labels, vector_csv(in.sem.col_ids, label_dist, "y", "p"));
    return r.commit(sub, json);
  }
};

// --- capacity -------------------------------------------------------------

struct CapacityCmd {
  std::string sem, out, json;

  int run(CLI::App& sub) const {
    Run r("capacity");
    const auto m = read_matrix(sem);
    semg_capacity_info info;
    std::vector<double> source(m.rows());
    std::vector<size_t> peaks(m.cols());
    check(semg_capacity(m.rows(), m.cols(), m.values.data(), &info, source.data(), peaks.data()),
          "capacity");
    if (info.duplicate_peak) r.warn("DuplicatePeak: several labels share a peak instance");
    r.metrics()["capacity"] = number(info.capacity);
    r.metrics()["R"] = number(info.R);
    r.metrics()["evaluations"] = info.evaluations;
    Json peak_ids = Json::array();
    for (size_t p : peaks) peak_ids.push_back(m.row_ids[p]);
    r.results()["peaks"] = peak_ids;
    r.results()["source"] = numbers(source);
    r.add_file(out, vector_csv(m.row_ids, source, m.corner, "p"));
    return r.commit(sub, json);
  }
};

// --- compress-gray --------------------------------------------------------

struct CompressGrayCmd {
  semg_gray_config config{};
  std::string family = "gaussian", out_dir, json;

  CompressGrayCmd() { semg_gray_config_default(&config); }

  int run(CLI::App& sub) {
    Run r("compress-gray");
    config.family = family == "crisp" ? SEMG_GRAY_CRISP : SEMG_GRAY_GAUSSIAN;
    Handle<semg_gray_demo, semg_gray_demo_free> demo;
    check(semg_gray_demo_run(&config, &demo.ptr), "compress-gray");
    semg_gray_summary s;
    check(semg_gray_demo_summary(demo.ptr, &s), "compress-gray");
    if (!s.converged) r.not_converged("s=" + io::format_double(config.s));
    r.metrics()["R"] = number(s.R);
    r.metrics()["G"] = number(s.G);
    r.metrics()["relative_gap"] = number(std::abs(s.R - s.G) / s.R);
    r.metrics()["efficiency"] = number(s.G / s.R);
    r.metrics()["iterations"] = s.iterations;
    r.metrics()["G_max"] = number(s.G_max);
    r.metrics()["R_at_G_max"] = number(s.R_at_G_max);

    std::vector<double> truth(s.levels * s.labels), channel(s.levels * s.labels);
    std::vector<double> centers(s.labels), sigmas(s.labels), probs(s.labels);
    std::vector<int> iters(s.trace_length);
    std::vector<double> tr(s.trace_length), tg(s.trace_length);
    check(semg_gray_demo_matrices(demo.ptr, truth.data(), channel.data()), "compress-gray");
    check(semg_gray_demo_labels(demo.ptr, centers.data(), sigmas.data(), probs.data()),
          "compress-gray");
    check(semg_gray_demo_trace(demo.ptr, iters.data(), tr.data(), tg.data()), "compress-gray");
    r.results()["centers"] = numbers(centers);
    r.results()["sigmas"] = numbers(sigmas);
    r.results()["label_dist"] = numbers(probs);

    if (!out_dir.empty()) {
      const auto xs = numbered_ids("", s.levels);
      const auto ys = numbered_ids("y", s.labels);
      r.add_file(out_dir + "/truth.csv", matrix_csv("x", xs, ys, truth));
      r.add_file(out_dir + "/channel.csv", matrix_csv("x", xs, ys, channel));
      io::CsvWriter labels({"label", "center", "sigma", "p"});
      for (std::size_t j = 0; j < s.labels; ++j)
        labels.row(std::vector<std::string>{ys[j], io::format_double(centers[j]),
                                            io::format_double(sigmas[j]),
                                            io::format_double(probs[j])});
      r.add_file(out_dir + "/labels.csv", labels.str());
      io::CsvWriter trace({"iter", "R", "G"});
      for (std::size_t k = 0; k < s.trace_length; ++k)
        trace.row(std::vector<std::string>{std::to_string(iters[k]), io::format_double(tr[k]),
                                           io::format_double(tg[k])});
      r.add_file(out_dir + "/trace.csv", trace.str());
    }
    return r.commit(sub, json);
  }
};

// --- lbi ------------------------------------------------------------------

struct LbiCmd {
  std::string source, channel, family = "direct", centers, sigmas, knots, out, params, json;

  int run(CLI::App& sub) const {
    Run r("lbi");
    const auto in = load(source, channel);
    const std::size_t n = in.sem.rows(), m = in.sem.cols();
    std::vector<double> sem(n * m);
    Json fitted = Json::array();
    if (family == "direct") {
      check(semg_lbi_direct(n, m, in.source.values.data(), in.sem.values.data(), sem.data()),
            "lbi");
    } else {
      const auto values = support_values(in.source.ids);
      std::vector<double> points;
      int fam = SEMG_FAMILY_GAUSSIAN;
      std::size_t arity = 2;
      if (family == "gaussian") {
        if (sigmas.empty()) throw InputError("--sigmas is required for the gaussian family");
        const auto cs = centers.empty() ? values : io::parse_number_list(centers, "--centers");
        for (double c : cs)
          for (double s : io::parse_number_list(sigmas, "--sigmas")) {
            points.push_back(c);
            points.push_back(s);
          }
      } else {
        if (knots.empty()) throw InputError("--knots is required for the trapezoid family");
        fam = SEMG_FAMILY_TRAPEZOID;
        arity = 4;
        auto k = io::parse_number_list(knots, "--knots");
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        for (std::size_t a = 0; a < k.size(); ++a)
          for (std::size_t b = a; b < k.size(); ++b)
            for (std::size_t c = b; c < k.size(); ++c)
              for (std::size_t d = c; d < k.size(); ++d)
                points.insert(points.end(), {k[a], k[b], k[c], k[d]});
      }
      const std::size_t n_points = points.size() / arity;
      for (std::size_t j = 0; j < m; ++j) {
        const auto cond = posterior_column(in.source.values, in.sem, j);
        std::vector<double> best(arity), truth(n);
        double score = 0;
        size_t index = 0;
        check(semg_lbi_parametric(n, cond.data(), in.source.values.data(), values.data(), fam,
                                  n_points, points.data(), best.data(), &score, &index),
              "lbi label " + in.sem.col_ids[j]);
        check(semg_evaluate_family(n, values.data(), fam, best.data(), truth.data()), "lbi");
        for (std::size_t i = 0; i < n; ++i) sem[i * m + j] = truth[i];
        fitted.push_back(
            Json{{"label", in.sem.col_ids[j]}, {"params", numbers(best)}, {"score", number(score)}});
      }
    }
    Json sidecar{{"family", family}, {"labels", fitted}};
    r.results()["fit"] = sidecar;
    r.add_file(out, matrix_csv(in.sem.corner, in.sem.row_ids, in.sem.col_ids, sem));
    r.add_file(params, sidecar.dump(2) + "\n");
    return r.commit(sub, json);
  }
};

// --- classify -------------------------------------------------------------

struct ClassifyCmd {
  std::string source, sem, criterion = "max-info", out, json;

  int run(CLI::App& sub) const {
    Run r("classify");
    const auto in = load(source, sem);
    std::vector<size_t> labels(in.sem.rows());
    check(semg_classify(in.sem.rows(), in.sem.cols(), in.source.values.data(),
                        in.sem.values.data(),
                        criterion == "max-info" ? SEMG_CLASSIFY_MAX_INFORMATION
                                                : SEMG_CLASSIFY_MIN_DISTORTION,
                        labels.data()),
          "classify");
    io::CsvWriter w({in.sem.corner, "label"});
    Json assignment = Json::object();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      w.row(std::vector<std::string>{in.sem.row_ids[i], in.sem.col_ids[labels[i]]});
      assignment[in.sem.row_ids[i]] = in.sem.col_ids[labels[i]];
    }
    r.results()["assignment"] = assignment;
    r.add_file(out, w.str());
    return r.commit(sub, json);
  }
};

void add_json(CLI::App& sub, std::string& json) {
  sub.add_option("--json", json, "Also write the JSON result envelope to this file");
}

}  // namespace

void register_semantic_commands(CLI::App& app,
                                std::vector<std::pair<CLI::App*, CommandHandler>>& out) {
  {
    auto cmd = std::make_shared<RgCurveCmd>();
    auto* sub = app.add_subcommand("rg-curve", "Rate-fidelity function R(G) over a grid of slopes");
    sub->add_option("--source", cmd->source, "Source CSV (x,p)")->required()->check(CLI::ExistingFile);
    sub->add_option("--sem", cmd->sem, "Semantic channel CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--s-grid", cmd->s_grid, "Slopes, start:stop:step or a comma list");
    sub->add_option("--out", cmd->out, "Curve CSV (s,R,G,iterations,converged)");
    sub->add_flag("--no-warm-start", cmd->no_warm_start, "Start every slope from uniform P(y)");
    sub->add_option("--jobs", cmd->jobs, "Parallel workers (needs --no-warm-start)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--dump-channels", cmd->dump_channels, "Include channels in the JSON output");
    cmd->solver.add_to(*sub);
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<RdSolveCmd>();
    auto* sub = app.add_subcommand("rd-solve", "Rate-distortion point under a semantic constraint");
    sub->add_option("--source", cmd->source, "Source CSV (x,p)")->required()->check(CLI::ExistingFile);
    auto* sem = sub->add_option("--sem", cmd->sem, "Truth functions CSV")->check(CLI::ExistingFile);
    auto* dist = sub->add_option("--distortion", cmd->distortion, "Distortion matrix CSV")
                     ->check(CLI::ExistingFile);
    sem->excludes(dist);
    auto* slope = sub->add_option("--s", cmd->s, "Slope");
    auto* target = sub->add_option("--target-d", cmd->target_d, "Target average distortion")
                       ->check(CLI::NonNegativeNumber);
    slope->excludes(target);
    sub->add_option("--out", cmd->out, "Channel CSV");
    sub->add_option("--labels", cmd->labels, "Label distribution CSV (y,p)");
    cmd->solver.add_to(*sub);
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub, sem, dist, target] {
      if (sem->count() + dist->count() != 1)
        throw InputError("rd-solve: exactly one of --sem and --distortion is required");
      return cmd->run(*sub, target->count() == 0);
    });
  }
  {
    auto cmd = std::make_shared<CapacityCmd>();
    auto* sub = app.add_subcommand("capacity", "Semantic channel capacity and maximizing source");
    sub->add_option("--sem", cmd->sem, "Semantic channel CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", cmd->out, "Maximizing source CSV");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<CompressGrayCmd>();
    auto* sub = app.add_subcommand("compress-gray", "Gray-level compression demo");
    auto& c = cmd->config;
    sub->add_option("--levels", c.levels, "Number of gray levels")->check(CLI::Range(2, 1 << 16));
    sub->add_option("--labels", c.n_labels, "Number of labels")->check(CLI::Range(1, 1 << 16));
    sub->add_option("--family", cmd->family, "Truth-function family")
        ->check(CLI::IsMember({"gaussian", "crisp"}));
    sub->add_option("--sigma0", c.sigma0, "Base width; 0 selects levels/24");
    sub->add_option("--beta", c.beta, "Widening of width and spacing with gray level")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--s", c.s, "Slope");
    sub->add_option("--tol", c.tol, "Convergence tolerance on P(y)")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", c.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--out-dir", cmd->out_dir,
                    "Directory for truth.csv, channel.csv, labels.csv, trace.csv");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<LbiCmd>();
    auto* sub = app.add_subcommand("lbi", "Learn truth functions from a Shannon channel");
    sub->add_option("--source", cmd->source, "Source CSV (x,p)")->required()->check(CLI::ExistingFile);
    sub->add_option("--channel", cmd->channel, "Shannon channel CSV P(y|x)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--family", cmd->family, "direct, gaussian or trapezoid")
        ->check(CLI::IsMember({"direct", "gaussian", "trapezoid"}));
    sub->add_option("--centers", cmd->centers, "Gaussian centers (default: instance values)");
    sub->add_option("--sigmas", cmd->sigmas, "Gaussian widths");
    sub->add_option("--knots", cmd->knots, "Trapezoid knot candidates");
    sub->add_option("--out", cmd->out, "Semantic channel CSV");
    sub->add_option("--params", cmd->params, "JSON sidecar with fitted parameters");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<ClassifyCmd>();
    auto* sub = app.add_subcommand("classify", "Label every instance by a semantic channel");
    sub->add_option("--source", cmd->source, "Source CSV (x,p)")->required()->check(CLI::ExistingFile);
    sub->add_option("--sem", cmd->sem, "Semantic channel CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--criterion", cmd->criterion, "max-info or min-distortion")
        ->check(CLI::IsMember({"max-info", "min-distortion"}));
    sub->add_option("--out", cmd->out, "Assignment CSV (x,label)");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
}

}  // namespace semg_cli
