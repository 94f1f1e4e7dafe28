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

// confirm, kelly, growth, info-value, reproduce.

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace semg_cli {

namespace {

namespace io = semg::io;

void add_json(CLI::App& sub, std::string& json) {
  sub.add_option("--json", json, "Also write the JSON result envelope to this file");
}

// --- confirm ----------------------------------------------------------------

struct ConfirmCmd {
  std::vector<double> table;
  std::vector<std::string> measures{"b1", "c1", "pd", "cc"};
  std::string json;

  int run(CLI::App& sub) const {
    Run r("confirm");
    if (table.size() != 4) throw InputError("--table needs four counts a,b,c,d");
    for (const auto& m : measures) {
      const int code = m == "b1" ? SEMG_MEASURE_B1
                       : m == "c1" ? SEMG_MEASURE_C1
                       : m == "pd" ? SEMG_MEASURE_PD
                                   : SEMG_MEASURE_CC;
      double v = 0;
      check(semg_confirmation(table[0], table[1], table[2], table[3], code, &v), "confirm " + m);
      r.results()[m] = number(v);
    }
    return r.commit(sub, json);
  }
};

// --- kelly ------------------------------------------------------------------

struct KellyCmd {
  double p = 0.5, r1 = 1.0, r2 = 1.0, r0 = 0.0;
  std::string json;

  int run(CLI::App& sub) const {
    Run r("kelly");
    double q = 0;
    int no_edge = 0;
    check(semg_kelly(p, r1, r2, r0, &q, &no_edge), "kelly");
    semg_investment_capacity cap;
    check(semg_investment_capacity_get(p, r1, r2, r0, &cap), "kelly");
    if (no_edge) r.warn("NoEdge: the bet has no positive expected excess return");
    r.results()["q_star"] = number(q);
    r.results()["growth"] = number(cap.exact);
    r.results()["full_bet_risk"] = number(cap.full_bet_risk);
    r.results()["edge_to_risk"] = number(cap.edge_to_risk);
    r.results()["closed_form"] = number(cap.closed_form);
    r.results()["approximation"] = number(cap.approximation);
    return r.commit(sub, json);
  }
};

// --- growth / info-value ----------------------------------------------------

struct PortfolioFile {
  std::vector<double> probs;
  std::vector<double> returns;
  std::size_t outcomes = 0, assets = 0;
  std::vector<std::string> labels;
};

PortfolioFile read_portfolio(const std::string& path, bool need_probs) {
  const Json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("returns"))
    throw InputError(path + ": expected an object with 'returns'");
  PortfolioFile f;
  f.returns = json_matrix(doc.at("returns"), path + ": returns", f.outcomes, f.assets);
  if (doc.contains("probs")) {
    f.probs = json_vector(doc.at("probs"), path + ": probs");
    if (f.probs.size() != f.outcomes)
      throw InputError(path + ": probs has " + std::to_string(f.probs.size()) + " entries for " +
                       std::to_string(f.outcomes) + " outcomes");
  } else if (need_probs) {
    throw InputError(path + ": 'probs' is required");
  }
  if (doc.contains("labels")) {
    for (const auto& v : doc.at("labels")) {
      if (!v.is_string()) throw InputError(path + ": labels must be strings");
      f.labels.push_back(v.get<std::string>());
    }
    if (f.labels.size() != f.assets)
      throw InputError(path + ": labels has " + std::to_string(f.labels.size()) +
                       " entries for " + std::to_string(f.assets) + " assets");
  } else {
    f.labels = numbered_ids("asset", f.assets);
    f.labels[0] = "cash";
  }
  return f;
}

Json risk_json(const semg_risk_measures& rm) {
  return Json{{"arithmetic", number(rm.arithmetic)},
              {"geometric", number(rm.geometric)},
              {"risk", number(rm.risk)},
              {"sin_alpha", number(rm.sin_alpha)}};
}

struct GrowthCmd {
  std::string spec, q, out, json;

  int run(CLI::App& sub) const {
    Run r("growth");
    const auto f = read_portfolio(spec, true);
    std::vector<double> ratios(f.assets);
    if (q.empty()) {
      check(semg_optimal_ratios(f.outcomes, f.assets, f.probs.data(), f.returns.data(),
                                ratios.data()),
            "growth");
    } else {
      const auto qv = read_vector(q);
      if (qv.ids != f.labels)
        throw InputError(q + ": DomainMismatch: asset identifiers differ from " + spec);
      ratios = qv.values;
    }
    double g = 0;
    semg_risk_measures rm;
    check(semg_growth_entropy(f.outcomes, f.assets, f.probs.data(), f.returns.data(),
                              ratios.data(), &g, &rm),
          "growth");
    r.results()["growth"] = number(g);
    r.results()["ratios"] = numbers(ratios);
    r.results()["risk"] = risk_json(rm);
    r.add_file(out, vector_csv(f.labels, ratios, "asset", "q"));
    return r.commit(sub, json);
  }
};

struct InfoValueCmd {
  std::string spec, prior, pred, realized, json;

  int run(CLI::App& sub) const {
    Run r("info-value");
    const auto f = read_portfolio(spec, false);
    const auto pv = read_vector(prior);
    const auto dv = read_vector(pred);
    const auto rv = read_vector(realized);
    if (dv.ids != pv.ids || rv.ids != pv.ids)
      throw InputError("DomainMismatch: prior, prediction and realized outcomes differ");
    if (pv.values.size() != f.outcomes)
      throw InputError(prior + ": " + std::to_string(pv.values.size()) + " outcomes, " + spec +
                       " has " + std::to_string(f.outcomes));
    double value = 0, arrow = 0;
    std::vector<double> q_prior(f.assets), q_post(f.assets), pointwise(f.outcomes);
    check(semg_information_value(f.outcomes, f.assets, pv.values.data(), dv.values.data(),
                                 rv.values.data(), f.returns.data(), &value, q_prior.data(),
                                 q_post.data(), pointwise.data()),
          "info-value");
    check(semg_arrow_value(f.outcomes, dv.values.data(), &arrow), "info-value");
    if (value < 0) r.warn("NegativeValue: the prediction lowered the realized growth");
    r.results()["value"] = number(value);
    r.results()["q_prior"] = numbers(q_prior);
    r.results()["q_posterior"] = numbers(q_post);
    Json pw = Json::object();
    for (std::size_t i = 0; i < f.outcomes; ++i) pw[pv.ids[i]] = number(pointwise[i]);
    r.results()["pointwise"] = pw;
    r.results()["arrow_value"] = number(arrow);
    return r.commit(sub, json);
  }
};

// --- reproduce --------------------------------------------------------------

struct ReproduceCmd {
  std::string figure, out_dir, json;

  int run(CLI::App& sub) const {
    Run r("reproduce");
    semg_artifacts* raw = nullptr;
    check(semg_reproduce(figure.c_str(), &raw), "reproduce");
    std::unique_ptr<semg_artifacts, void (*)(semg_artifacts*)> a(raw, semg_artifacts_free);
    const std::string dir = out_dir.empty() ? "results/" + figure : out_dir;
    r.metrics()["figure"] = figure;
    for (std::size_t k = 0; k < semg_artifacts_metric_count(a.get()); ++k)
      r.metrics()[semg_artifacts_metric_name(a.get(), k)] =
          number(semg_artifacts_metric_value(a.get(), k));
    for (std::size_t k = 0; k < semg_artifacts_warning_count(a.get()); ++k) {
      const std::string w = semg_artifacts_warning(a.get(), k);
      if (w.rfind("NotConverged: ", 0) == 0) {
        r.not_converged(figure + " " + w.substr(14));
      } else {
        r.warn(w);
      }
    }
    for (std::size_t k = 0; k < semg_artifacts_file_count(a.get()); ++k) {
      size_t len = 0;
      const char* content = semg_artifacts_file_content(a.get(), k, &len);
      r.add_file(dir + "/" + semg_artifacts_file_name(a.get(), k), std::string(content, len));
    }
    return r.commit(sub, json);
  }
};

std::vector<std::string> figure_ids() {
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < semg_figure_count(); ++k) ids.emplace_back(semg_figure_id(k));
  return ids;
}

}  // namespace

void register_decision_commands(CLI::App& app,
                                std::vector<std::pair<CLI::App*, CommandHandler>>& out) {
  {
    auto cmd = std::make_shared<ConfirmCmd>();
    auto* sub = app.add_subcommand("confirm", "Confirmation measures of a rule x1 => y1");
    sub->add_option("--table", cmd->table, "Counts a,b,c,d: (x1,y1),(x1,y0),(x0,y1),(x0,y0)")
        ->required()
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--measures", cmd->measures, "Subset of b1,c1,pd,cc")
        ->delimiter(',')
        ->check(CLI::IsMember({"b1", "c1", "pd", "cc"}));
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<KellyCmd>();
    auto* sub = app.add_subcommand("kelly", "Growth-optimal fraction of a two-outcome bet");
    sub->add_option("--p", cmd->p, "Win probability")->required()->check(CLI::Range(0.0, 1.0));
    sub->add_option("--r1", cmd->r1, "Fraction of the stake lost on a loss")->required();
    sub->add_option("--r2", cmd->r2, "Fraction of the stake gained on a win")->required();
    sub->add_option("--r0", cmd->r0, "Return of idle capital");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<GrowthCmd>();
    auto* sub = app.add_subcommand("growth", "Capital growth entropy and risk of a portfolio");
    sub->add_option("--spec", cmd->spec, "Portfolio JSON {probs, returns, labels}")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--q", cmd->q, "Ratios CSV (asset,q); default: growth-optimal ratios")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", cmd->out, "Ratios CSV written back");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<InfoValueCmd>();
    auto* sub = app.add_subcommand("info-value", "Information value of a probability forecast");
    sub->add_option("--spec", cmd->spec, "Portfolio JSON {returns, labels}")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--prior", cmd->prior, "Prior outcome CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--pred", cmd->pred, "Predicted outcome CSV")->required()->check(CLI::ExistingFile);
    sub->add_option("--realized", cmd->realized, "Realized outcome CSV")
        ->required()
        ->check(CLI::ExistingFile);
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
  {
    auto cmd = std::make_shared<ReproduceCmd>();
    auto* sub = app.add_subcommand("reproduce", "Run a built-in figure setup");
    sub->add_option("figure", cmd->figure, "Figure id")->required()->check(CLI::IsMember(figure_ids()));
    sub->add_option("--out-dir", cmd->out_dir, "Output directory (default results/<figure>)");
    add_json(*sub, cmd->json);
    out.emplace_back(sub, [cmd, sub] { return cmd->run(*sub); });
  }
}

}  // namespace semg_cli
