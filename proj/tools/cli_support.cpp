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

#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

namespace semg_cli {

namespace io = semg::io;

void check(semg_status status, const std::string& what) {
  if (status == SEMG_OK) return;
  throw InputError(what + ": " + semg_status_name(status) + ": " + semg_last_error());
}

Run::Run(std::string command) : command_(std::move(command)) {}

void Run::warn(const std::string& warning) { warnings_.push_back(warning); }

void Run::not_converged(const std::string& what) {
  not_converged_ = true;
  warn("NotConverged: " + what);
}

void Run::add_file(const std::string& path, std::string content) {
  if (!path.empty()) files_.emplace_back(path, std::move(content));
}

int Run::commit(const CLI::App& sub, const std::string& json_path) {
  Json envelope;
  envelope["command"] = command_;
  envelope["version"] = semg_version();
  envelope["log_base"] = semg_log_base() == SEMG_LOG_BITS ? "2" : "e";
  envelope["config"] = config_echo(sub);
  envelope["metrics"] = metrics_;
  if (!results_.empty()) envelope["results"] = results_;
  envelope["warnings"] = warnings_;
  Json outputs = Json::array();
  for (const auto& f : files_) outputs.push_back(f.first);
  if (!json_path.empty()) outputs.push_back(json_path);
  envelope["outputs"] = outputs;

  const std::string text = envelope.dump(2) + "\n";
  for (const auto& [path, content] : files_) io::write_file(path, content);
  if (!json_path.empty()) io::write_file(json_path, text);
  std::cout << text;
  return not_converged_ ? 2 : 0;
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json config_echo(const CLI::App& sub) {
  Json options = Json::object();
  Json arguments = Json::array();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == sub.get_help_ptr()) continue;
    if (!opt->nonpositional()) {
      for (const auto& r : opt->results()) arguments.push_back(r);
      continue;
    }
    // Short-only options keep their dash so replay can tell them apart.
    const std::string name = opt->get_lnames().empty() ? "-" + opt->get_snames().front()
                                                        : opt->get_lnames().front();
    if (opt->get_expected_min() == 0) {
      options[name] = opt->count() > 0;
    } else if (!opt->results().empty()) {
      if (opt->get_expected_max() > 1) {
        options[name] = opt->results();
      } else {
        options[name] = opt->results().back();
      }
    } else if (!opt->get_default_str().empty()) {
      std::string def = opt->get_default_str();
      if (opt->get_expected_max() > 1) {
        // Vector defaults are captured as "[a,b,c]".
        if (def.size() >= 2 && def.front() == '[' && def.back() == ']')
          def = def.substr(1, def.size() - 2);
        Json items = Json::array();
        std::size_t start = 0;
        while (start <= def.size()) {
          const auto comma = def.find(',', start);
          items.push_back(def.substr(start, comma == std::string::npos ? comma : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        options[name] = items;
      } else {
        options[name] = def;
      }
    }
  }
  Json out;
  out["command"] = sub.get_name();
  out["log_base"] = semg_log_base() == SEMG_LOG_BITS ? "2" : "e";
  out["options"] = options;
  out["arguments"] = arguments;
  return out;
}

std::vector<std::string> replay_arguments(const Json& config) {
  try {
    std::vector<std::string> args;
    if (config.contains("log_base")) {
      args.push_back("--log-base");
      args.push_back(config.at("log_base").get<std::string>());
    }
    args.push_back(config.at("command").get<std::string>());
    for (const auto& [name, value] : config.at("options").items()) {
      const std::string flag = name.front() == '-' ? name : "--" + name;
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back(flag);
      } else if (value.is_array()) {
        args.push_back(flag);
        for (const auto& v : value) args.push_back(v.get<std::string>());
      } else {
        args.push_back(flag);
        args.push_back(value.get<std::string>());
      }
    }
    if (config.contains("arguments"))
      for (const auto& v : config.at("arguments")) args.push_back(v.get<std::string>());
    return args;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed config echo: ") + e.what());
  }
}

io::LabeledVector read_vector(const std::string& path) {
  return io::parse_labeled_vector(io::read_file(path), path);
}

io::LabeledMatrix read_matrix(const std::string& path) {
  return io::parse_labeled_matrix(io::read_file(path), path);
}

Json read_json(const std::string& path) {
  const std::string text = io::read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<double> support_values(const std::vector<std::string>& ids) {
  std::vector<double> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    char* end = nullptr;
    const double v = std::strtod(id.c_str(), &end);
    if (id.empty() || end != id.c_str() + id.size() || !std::isfinite(v)) {
      out.clear();
      for (std::size_t i = 0; i < ids.size(); ++i) out.push_back(static_cast<double>(i));
      return out;
    }
    out.push_back(v);
  }
  return out;
}

std::string matrix_csv(const std::string& corner, const std::vector<std::string>& row_ids,
                       const std::vector<std::string>& col_ids, const std::vector<double>& values) {
  io::LabeledMatrix m;
  m.corner = corner;
  m.row_ids = row_ids;
  m.col_ids = col_ids;
  m.values = values;
  return io::write_labeled_matrix(m);
}

std::string vector_csv(const std::vector<std::string>& ids, const std::vector<double>& values,
                       const std::string& id_header, const std::string& value_header) {
  return io::write_labeled_vector({ids, values}, id_header, value_header);
}

std::vector<double> json_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError(what + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> json_matrix(const Json& j, const std::string& what, std::size_t& rows,
                                std::size_t& cols) {
  if (!j.is_array() || j.empty()) throw InputError(what + ": expected a non-empty array of rows");
  rows = j.size();
  cols = 0;
  std::vector<double> out;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = json_vector(j[i], what + " row " + std::to_string(i));
    if (i == 0) cols = row.size();
    if (row.size() != cols || cols == 0)
      throw InputError(what + ": row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void SolverFlags::add_to(CLI::App& sub) {
  sub.add_option("--tol", tol, "Convergence tolerance on P(y)")->check(CLI::PositiveNumber);
  sub.add_option("--max-iter", max_iter, "Iteration cap")->check(CLI::PositiveNumber);
}

}  // namespace semg_cli
