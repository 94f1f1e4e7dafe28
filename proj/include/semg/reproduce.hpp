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

#include <string>
#include <utility>
#include <vector>

namespace semg {

// One output file of a figure reproduction.
struct Artifact {
  std::string name;
  std::string content;
};

struct ReproduceResult {
  std::string figure;
  std::vector<Artifact> files;
  std::vector<std::pair<std::string, double>> metrics;  // in insertion order
  std::vector<std::string> warnings;
};

const std::vector<std::string>& figure_ids();

// Runs the built-in setup of a figure. Throws Error(unknown_figure).
ReproduceResult reproduce(const std::string& figure);

}  // namespace semg
