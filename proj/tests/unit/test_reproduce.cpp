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
#include "unit_helpers.hpp"

using namespace semg;

TEST_SUITE("reproduce") {

TEST_CASE("registry") {
  CHECK(figure_ids().size() == 7);
  SEMG_CHECK_CODE(reproduce("fig99"), ErrorCode::unknown_figure);
}

TEST_CASE("figures are deterministic and carry metrics") {
  for (const char* id : {"fig6", "fig12", "fig16"}) {
    CAPTURE(id);
    const auto a = reproduce(id);
    const auto b = reproduce(id);
    CHECK(a.figure == id);
    CHECK_FALSE(a.files.empty());
    CHECK_FALSE(a.metrics.empty());
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t k = 0; k < a.files.size(); ++k) {
      CHECK(a.files[k].name == b.files[k].name);
      CHECK(a.files[k].content == b.files[k].content);
    }
    CHECK(a.metrics == b.metrics);
  }
}

}  // TEST_SUITE
