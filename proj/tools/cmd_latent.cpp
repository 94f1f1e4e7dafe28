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

// maxmi-classify, mixture-enm, svb, control.

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace semg_cli {

namespace {

namespace io = semg::io;

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
};

void add_json(CLI::App& sub, std::string& json) {
  sub.add_option("--json", json, "Also write the JSON result envelope to this file");
}

std::vector<std::string> json_ids(const Json& doc, const char* key, const std::string& prefix,
                                  std::size_t n, const std::string& path) {
  if (!doc.contains(key)) return numbered_ids(prefix, n);
  std::vector<std::string> ids;
  for (const auto& v : doc.at(key)) {
    if (!v.is_string()) throw InputError(path + ": '" + key + "' must list strings");
    ids.push_back(v.get<std::string>());
  }
  if (ids.size() != n)
    throw InputError(path + ": '" + key + "' has " + std::to_string(ids.size()) +
                     " entries, expected " + std::to_string(n));
  return ids;
}

// --- maxmi-classify ---------------------------------------------------------

struct MaxMiCmd {
  std::string obs, init, out, trace, json;
  int max_iter = 100;

  int run(CLI::App& sub) const {
    Run r("maxmi-classify");
    const Json doc = read_json(obs);
    if (!doc.is_object() || !doc.contains("source") || !doc.contains("z_given_x"))
      throw InputError(obs + ": expected an object with 'source' and 'z_given_x'");
    const auto source = json_vector(doc.at("source"), obs + ": source");
    std::size_t n_x = 0, n_z = 0;
    const auto z_given_x = json_matrix(doc.at("z_given_x"), obs + ": z_given_x", n_x, n_z);
    if (n_x != source.size())
      throw InputError(obs + ": z_given_x has " + std::to_string(n_x) + " rows for " +
                       std::to_string(source.size()) + " instances");
    const auto z_ids = json_ids(doc, "z", "z", n_z, obs);

    const auto part = read_vector(init);
    if (part.ids != z_ids)
      throw InputError(init + ": DomainMismatch: observation identifiers differ from " + obs);
    std::vector<size_t> start;
    for (std::size_t k = 0; k < part.values.size(); ++k) {
      const double v = part.values[k];
      if (v < 0 || v != std::floor(v) || v > 1e6)
        throw InputError(init + ": line " + std::to_string(k + 2) +
                         ": labels must be nonnegative integers");
      start.push_back(static_cast<size_t>(v));
    }

    Handle<semg_maxmi_result, semg_maxmi_free> res;
    check(semg_maxmi_classify(n_x, n_z, source.data(), z_given_x.data(), start.data(), max_iter,
                              &res.ptr),
          "maxmi-classify");
    semg_maxmi_summary s;
    check(semg_maxmi_summary_get(res.ptr, &s), "maxmi-classify");
    std::vector<size_t> final_part(n_z);
    std::vector<double> mi(s.trace_length);
    check(semg_maxmi_partition(res.ptr, final_part.data()), "maxmi-classify");
    check(semg_maxmi_trace(res.ptr, mi.data()), "maxmi-classify");

    if (s.dropped_empty) r.warn("DroppedEmptyClass: a label lost all observations");
    if (s.cycle_detected) r.warn("CycleDetected: returned the best partition seen");
    if (s.monotone_violation) r.warn("MonotoneViolation: mutual information decreased");
    if (!s.converged && !s.cycle_detected && !s.monotone_violation)
      r.not_converged("partition still changing after " + std::to_string(s.rounds) + " rounds");
    r.metrics()["rounds"] = s.rounds;
    r.metrics()["converged"] = s.converged != 0;
    r.metrics()["mutual_information"] = number(mi.empty() ? 0.0 : mi.back());
    r.results()["mi_trace"] = numbers(mi);

    io::CsvWriter pw({"z", "label"});
    for (std::size_t k = 0; k < n_z; ++k)
      pw.row(std::vector<std::string>{z_ids[k], std::to_string(final_part[k])});
    io::CsvWriter tw({"round", "mi"});
    for (std::size_t k = 0; k < mi.size(); ++k)
      tw.row(std::vector<std::string>{std::to_string(k), io::format_double(mi[k])});
    r.add_file(out, pw.str());
    r.add_file(trace, tw.str());
    return r.commit(sub, json);
  }
};

// --- mixture-enm ------------------------------------------------------------

struct EnmCmd {
  std::string data, init, trace, out, json;
  int n_inner = 3, max_outer = 1000;
  double tol = 1e-4;

  int run(CLI::App& sub) const {
    Run r("mixture-enm");
    const auto p = read_vector(data);
    const auto grid = support_values(p.ids);
    const std::size_t n = p.values.size();

    const Json model = read_json(init);
    if (!model.is_object() || !model.contains("weights") || !model.contains("components"))
      throw InputError(init + ": expected an object with 'weights' and 'components'");
    const auto weights = json_vector(model.at("weights"), init + ": weights");
    const auto& comps = model.at("components");
    if (!comps.is_array() || comps.size() != weights.size())
      throw InputError(init + ": 'components' must have one entry per weight");
    std::vector<semg_component_spec> specs(comps.size());
    std::vector<std::vector<double>> tables(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const auto& c = comps[j];
      const std::string where = init + ": component " + std::to_string(j);
      const std::string type = c.value("type", "");
      if (type == "gaussian") {
        if (!c.contains("mean") || !c.contains("sigma") || !c["mean"].is_number() ||
            !c["sigma"].is_number())
          throw InputError(where + ": gaussian needs numeric 'mean' and 'sigma'");
        specs[j] = {SEMG_COMPONENT_GAUSSIAN, c["mean"].get<double>(), c["sigma"].get<double>(),
                    nullptr};
      } else if (type == "table") {
        if (!c.contains("probs")) throw InputError(where + ": table needs 'probs'");
        tables[j] = json_vector(c["probs"], where + ": probs");
        if (tables[j].size() != n)
          throw InputError(where + ": probs has " + std::to_string(tables[j].size()) +
                           " entries for a grid of " + std::to_string(n));
        specs[j] = {SEMG_COMPONENT_TABLE, 0.0, 0.0, tables[j].data()};
      } else {
        throw InputError(where + ": type must be 'gaussian' or 'table'");
      }
    }

    Handle<semg_enm_fit, semg_enm_free> fit;
    check(semg_enm_run(n, grid.data(), p.values.data(), specs.size(), weights.data(),
                       specs.data(), n_inner, tol, max_outer, &fit.ptr),
          "mixture-enm");
    semg_enm_summary s;
    check(semg_enm_summary_get(fit.ptr, &s), "mixture-enm");
    if (!s.converged)
      r.not_converged("KL(P||P_theta) above tolerance after " +
                      std::to_string(s.outer_iterations) + " outer iterations");

    std::vector<std::string> header{"iter", "R", "G", "Rpp", "KL_P_Ptheta", "KL_PY", "Q",
                                    "Fprime", "F"};
    for (std::size_t j = 0; j < s.components; ++j) header.push_back("w" + std::to_string(j));
    io::CsvWriter tw(header);
    semg_enm_record last{};
    for (std::size_t k = 0; k < s.trace_length; ++k) {
      std::vector<double> w(s.components);
      check(semg_enm_trace_record(fit.ptr, k, &last, w.data()), "mixture-enm");
      std::vector<double> row{static_cast<double>(last.iteration), last.R, last.G, last.Rpp,
                              last.kl_data_model, last.kl_labels, last.Q, last.Fprime, last.F};
      row.insert(row.end(), w.begin(), w.end());
      tw.row(row);
    }

    std::vector<double> fw(s.components), means(s.components), sigmas(s.components),
        probs(s.components * s.grid_size);
    std::vector<int> kinds(s.components);
    check(semg_enm_model(fit.ptr, fw.data(), kinds.data(), means.data(), sigmas.data(),
                         probs.data()),
          "mixture-enm");
    Json final_model;
    final_model["weights"] = numbers(fw);
    Json out_comps = Json::array();
    for (std::size_t j = 0; j < s.components; ++j) {
      if (kinds[j] == SEMG_COMPONENT_GAUSSIAN) {
        out_comps.push_back(
            Json{{"type", "gaussian"}, {"mean", number(means[j])}, {"sigma", number(sigmas[j])}});
      } else {
        const auto first = probs.begin() + static_cast<std::ptrdiff_t>(j * s.grid_size);
        out_comps.push_back(Json{
            {"type", "table"},
            {"probs", numbers({first, first + static_cast<std::ptrdiff_t>(s.grid_size)})}});
      }
    }
    final_model["components"] = out_comps;

    r.metrics()["outer_iterations"] = s.outer_iterations;
    r.metrics()["converged"] = s.converged != 0;
    r.metrics()["KL_P_Ptheta"] = number(last.kl_data_model);
    r.metrics()["R_minus_G"] = number(last.R - last.G);
    r.results()["model"] = final_model;
    r.add_file(trace, tw.str());
    r.add_file(out, final_model.dump(2) + "\n");
    return r.commit(sub, json);
  }
};

// --- svb --------------------------------------------------------------------

struct SvbCmd {
  std::string data, constraints, form = "likelihood", out, channel, json;
  double s = 1.0;
  SolverFlags solver{1e-10, 20000};

  int run(CLI::App& sub) const {
    Run r("svb");
    const auto p = read_vector(data);
    const auto c = read_matrix(constraints);
    if (c.row_ids != p.ids)
      throw InputError(constraints + ": DomainMismatch: row identifiers differ from the data");
    const auto opts = solver.options();
    semg_svb_info info;
    std::vector<double> labels(c.cols()), ch(c.rows() * c.cols());
    check(semg_svb_solve(c.rows(), c.cols(), p.values.data(), c.values.data(),
                         form == "truth" ? SEMG_SVB_TRUTH : SEMG_SVB_LIKELIHOOD, s, &opts, &info,
                         labels.data(), ch.data()),
          "svb");
    if (!info.converged) r.not_converged("label distribution still moving");
    r.metrics()["F"] = number(info.F);
    r.metrics()["posterior_entropy"] = number(info.posterior_entropy);
    r.metrics()["kl_labels"] = number(info.kl_labels);
    r.metrics()["R"] = number(info.R);
    r.metrics()["G"] = number(info.G);
    r.metrics()["iterations"] = info.iterations;
    r.results()["label_dist"] = numbers(labels);
    r.add_file(out, vector_csv(c.col_ids, labels, "y", "p"));
    r.add_file(channel, matrix_csv(c.corner, c.row_ids, c.col_ids, ch));
    return r.commit(sub, json);
  }
};

// --- control ----------------------------------------------------------------

struct ControlCmd {
  std::string baseline, targets, s_list = "1", out;
  bool normal = false;
  SolverFlags solver;

  int run(CLI::App& sub) const {
    Run r("control");
    const auto p = read_vector(baseline);
    const auto t = read_matrix(targets);
    if (t.row_ids != p.ids)
      throw InputError(targets + ": DomainMismatch: row identifiers differ from the baseline");
    const auto slopes = io::parse_number_list(s_list, "--s");
    const auto values = support_values(p.ids);
    const auto opts = solver.options();
    const std::size_t n = t.rows(), m = t.cols();
    Json runs = Json::array();
    for (double s : slopes) {
      semg_control_info info;
      std::vector<double> actions(m), results(m * n), goal(m);
      check(semg_control_solve(n, m, p.values.data(), t.values.data(), s,
                               normal ? values.data() : nullptr, &opts, &info, actions.data(),
                               nullptr, results.data(), goal.data()),
            "control");
      if (!info.converged) r.not_converged("s=" + io::format_double(s));
      Json item{{"s", number(s)},
                {"R", number(info.R)},
                {"G", number(info.G)},
                {"efficiency", number(info.G / info.R)},
                {"iterations", info.iterations},
                {"converged", info.converged != 0},
                {"action_dist", numbers(actions)},
                {"goal_info", numbers(goal)}};
      Json dists = Json::object();
      for (std::size_t j = 0; j < m; ++j)
        dists[t.col_ids[j]] = numbers({results.begin() + static_cast<std::ptrdiff_t>(j * n),
                                       results.begin() + static_cast<std::ptrdiff_t>((j + 1) * n)});
      item["result_dists"] = dists;
      if (normal) item["normal"] = Json{{"R", number(info.normal_R)}, {"G", number(info.normal_G)}};
      runs.push_back(item);
    }
    r.metrics()["runs"] = slopes.size();
    r.results()["runs"] = runs;
    return r.commit(sub, out);
  }
};

}  // namespace

void register_latent_commands(CLI::App& app,
                              std::vector<std::pair<CLI::App*, CommandHandler>>& out) {
  {
    auto cmd = std::make_shared<MaxMiCmd>();
    auto* sub = app.add_subcommand("maxmi-classify", "Maximum mutual information classification");
    sub->add_option("--obs", cmd->obs, "Observation model JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--init-partition", cmd->init, "Initial partition CSV (z,label)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--max-iter", cmd->max_iter, "Round cap")->check(CLI::PositiveNumber);
    sub->add_option("--out", cmd->out, "Final partition CSV");
    sub->add_option("--trace", cmd->trace, "MI trace CSV (round,mi)");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<EnmCmd>();
    auto* sub = app.add_subcommand("mixture-enm", "Fit a mixture with the EnM algorithm");
    sub->add_option("--data", cmd->data, "Data distribution CSV (x,p)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--init", cmd->init, "Initial model JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--n-inner", cmd->n_inner, "(E, M1) repetitions per outer step; 1 is EM")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", cmd->tol, "Stop when KL(P||P_theta) falls below this")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-outer", cmd->max_outer, "Outer iteration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--trace", cmd->trace, "Trace CSV");
    sub->add_option("--out", cmd->out, "Fitted model JSON");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<SvbCmd>();
    auto* sub = app.add_subcommand("svb", "Latent label distribution by semantic variational Bayes");
    sub->add_option("--data", cmd->data, "Data distribution CSV (x,p)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--constraints", cmd->constraints, "Constraint matrix CSV, one column per label")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--form", cmd->form, "likelihood or truth")
        ->check(CLI::IsMember({"likelihood", "truth"}));
    sub->add_option("--s", cmd->s, "Constraint strength");
    cmd->solver.add_to(*sub);
    sub->add_option("--out", cmd->out, "Label distribution CSV (y,p)");
    sub->add_option("--channel", cmd->channel, "Channel CSV P(y|x)");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<ControlCmd>();
    auto* sub = app.add_subcommand("control", "Goal-oriented control under fuzzy targets");
    sub->add_option("--baseline", cmd->baseline, "Baseline distribution CSV (x,p)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--targets", cmd->targets, "Target truth functions CSV, one column per action")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--s", cmd->s_list, "Slopes, comma list or start:stop:step");
    sub->add_flag("--normal", cmd->normal, "Also evaluate moment-matched normal results");
    cmd->solver.add_to(*sub);
    sub->add_option("--out", cmd->out, "Report JSON");
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
}

}  // namespace semg_cli
