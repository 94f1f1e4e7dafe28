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

#include <cmath>

#include "semg/fixtures.hpp"
#include "semg/goal_control.hpp"
#include "semg/info_measures.hpp"
#include "unit_helpers.hpp"

using namespace semg;

TEST_SUITE("goal_control") {

TEST_CASE("goal information") {
  testing::LogBaseGuard bits(LogBase::bits);
  const Source base({0.25, 0.25, 0.25, 0.25});
  const std::vector<double> crisp{1, 1, 0, 0};
  // landing inside a crisp target earns log 1/T(theta)
  CHECK(goal_info(std::vector<double>{0.5, 0.5, 0, 0}, base, crisp) == doctest::Approx(1.0));
  CHECK(goal_info(std::vector<double>{1, 0, 0, 0}, base, crisp) == doctest::Approx(1.0));

  const std::vector<double> fuzzy{1.0, 0.6, 0.3, 0.1};
  CHECK(goal_info(base.probs(), base, fuzzy) <= 0.0);

  testing::Gen gen(11);
  for (int k = 0; k < 100; ++k) {
    const Source p(gen.probs(5));
    auto t = gen.truth(5, 1).column(0);
    const auto a = gen.probs(5), b = gen.probs(5), c = gen.probs(5);
    CHECK(rl_reward(a, b, p, t) + rl_reward(b, c, p, t) ==
          doctest::Approx(rl_reward(a, c, p, t)).epsilon(1e-10));
    CHECK(rl_reward(p.probs(), b, p, t) ==
          doctest::Approx(goal_info(b, p, t) - goal_info(p.probs(), p, t)).epsilon(1e-10));
  }
  SEMG_CHECK_CODE(rl_reward(base.probs(), base.probs(), base, std::vector<double>(4, 0.0)),
                  ErrorCode::all_zero_overlap);
}

TEST_CASE("control solutions") {
  testing::LogBaseGuard bits(LogBase::bits);
  auto f = fixtures::two_target_control();
  const SolverOptions opts{1e-12, 20000};

  double prev_R = -1, prev_G = -1;
  for (double s : {1.0, 2.0, 5.0}) {
    CAPTURE(s);
    f.problem.s = s;
    const auto sol = solve_control(f.problem, opts);
    CHECK(sol.converged);
    double total = 0;
    for (std::size_t j = 0; j < sol.result_dists.size(); ++j) {
      double sum = 0;
      for (double v : sol.result_dists[j]) sum += v;
      CHECK(sum == doctest::Approx(1.0));
      total += sol.action_dist[j];
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK(multi_goal_info(sol, f.problem.baseline, f.problem.targets) ==
          doctest::Approx(sol.G).epsilon(1e-9));
    if (s == 1.0) CHECK(std::abs(sol.R - sol.G) < 1e-8);
    CHECK(sol.R > prev_R);
    CHECK(sol.G > prev_G);
    prev_R = sol.R;
    prev_G = sol.G;

    const auto proj = project_to_normal(sol, f.problem, f.values);
    CHECK(proj.delta_R == doctest::Approx(proj.R - sol.R));
    CHECK(proj.delta_G == doctest::Approx(proj.G - sol.G));
    CHECK(proj.G <= sol.G + 1e-9);
    for (const auto& r : proj.result_dists) {
      double sum = 0;
      for (double v : r) sum += v;
      CHECK(sum == doctest::Approx(1.0));
    }
  }
}

}  // TEST_SUITE
