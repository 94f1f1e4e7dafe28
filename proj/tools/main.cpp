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

// semg command-line front end. One command per process; results are printed
// as a JSON envelope on stdout and written to the requested CSV/JSON files.
//
// Exit status: 0 success, 2 results produced but a solver did not converge,
// 1 invalid input.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "semg/io/csv.hpp"

namespace {

using semg_cli::CommandHandler;

int apply_log_base(const std::string& value) {
  if (value == "2") return semg_set_log_base(SEMG_LOG_BITS);
  if (value == "e") return semg_set_log_base(SEMG_LOG_NATS);
  throw semg_cli::InputError("log base must be 2 or e, got '" + value + "'");
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Semantic information measures, rate-fidelity solvers and related tools", "semg"};
  app.set_version_flag("--version", std::string(semg_version()));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  std::string log_base = "2";
  if (const char* env = std::getenv("SEMG_LOG_BASE")) log_base = env;
  app.add_option("--log-base", log_base, "Unit of information: 2 (bits) or e (nats); "
                                         "defaults to $SEMG_LOG_BASE or 2");

  std::vector<std::pair<CLI::App*, CommandHandler>> commands;
  semg_cli::register_semantic_commands(app, commands);
  semg_cli::register_latent_commands(app, commands);
  semg_cli::register_decision_commands(app, commands);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  apply_log_base(log_base);
  for (auto& [sub, handler] : commands)
    if (sub->parsed()) return handler();
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::vector<std::string> args(argv, argv + argc);
    if (argc == 3 && args[1] == "--replay") {
      // Re-run a command from the "config" object of an earlier envelope.
      auto doc = semg_cli::read_json(args[2]);
      if (doc.contains("config")) doc = doc["config"];
      auto replay = semg_cli::replay_arguments(doc);
      replay.insert(replay.begin(), args[0]);
      args = std::move(replay);
    }
    std::vector<const char*> ptrs;
    for (const auto& a : args) ptrs.push_back(a.c_str());
    return run(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const semg_cli::InputError& e) {
    std::cerr << "semg: error: " << e.what() << "\n";
  } catch (const semg::io::ParseError& e) {
    std::cerr << "semg: error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "semg: error: " << e.what() << "\n";
  }
  return 1;
}
