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

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semg/io/csv.hpp"
#include "semg/semg.h"

namespace semg_cli {

using Json = nlohmann::ordered_json;

// Bad input detected by the front end or reported by the library. Exit 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws InputError carrying semg_last_error() unless status is SEMG_OK.
void check(semg_status status, const std::string& what);

// Accumulates the result envelope of one command. Files are only written by
// commit(), after the computation has succeeded.
class Run {
 public:
  explicit Run(std::string command);

  Json& metrics() { return metrics_; }
  Json& results() { return results_; }
  void warn(const std::string& warning);
  void not_converged(const std::string& what);
  void add_file(const std::string& path, std::string content);

  // Writes pending files, prints the envelope to stdout (and to json_path
  // when not empty) and returns the exit status.
  int commit(const CLI::App& sub, const std::string& json_path = "");

 private:
  std::string command_;
  Json metrics_ = Json::object();
  Json results_ = Json::object();
  std::vector<std::string> warnings_;
  bool not_converged_ = false;
  std::vector<std::pair<std::string, std::string>> files_;
};

// Finite doubles as numbers, the rest as "inf", "-inf" or "nan".
Json number(double v);
Json numbers(const std::vector<double>& v);

// {"command": ..., "options": {...}} for a parsed subcommand. Every option is
// echoed with its effective value, so the object can be replayed.
Json config_echo(const CLI::App& sub);
// Rebuilds an argument vector from a config echo.
std::vector<std::string> replay_arguments(const Json& config);

semg::io::LabeledVector read_vector(const std::string& path);
semg::io::LabeledMatrix read_matrix(const std::string& path);
Json read_json(const std::string& path);

// Parses each id as a number; falls back to 0, 1, ... when any id is not
// numeric.
std::vector<double> support_values(const std::vector<std::string>& ids);

std::string matrix_csv(const std::string& corner, const std::vector<std::string>& row_ids,
                       const std::vector<std::string>& col_ids, const std::vector<double>& values);
std::string vector_csv(const std::vector<std::string>& ids, const std::vector<double>& values,
                       const std::string& id_header, const std::string& value_header);

// Row-major matrix from a JSON array of equal-length arrays.
std::vector<double> json_matrix(const Json& j, const std::string& what, std::size_t& rows,
                                std::size_t& cols);
std::vector<double> json_vector(const Json& j, const std::string& what);

std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t n);

// Shared solver flags.
struct SolverFlags {
  double tol = 1e-8;
  int max_iter = 2000;

  void add_to(CLI::App& sub);
  semg_solver_options options() const { return {tol, max_iter}; }
};

using CommandHandler = std::function<int()>;

// Registration hooks of the command groups. Each adds its subcommands and
// stores the handler to run when that subcommand was selected.
void register_semantic_commands(CLI::App& app, std::vector<std::pair<CLI::App*, CommandHandler>>& out);
void register_latent_commands(CLI::App& app, std::vector<std::pair<CLI::App*, CommandHandler>>& out);
void register_decision_commands(CLI::App& app, std::vector<std::pair<CLI::App*, CommandHandler>>& out);

}  // namespace semg_cli
