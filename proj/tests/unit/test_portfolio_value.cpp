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

#include "semg/info_measures.hpp"
#include "semg/portfolio_value.hpp"
#include "unit_helpers.hpp"

using namespace semg;

namespace {

// Golden-section maximization of the bet growth over q in [lo, hi].
double golden_max(const BetSpec& bet, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  for (int k = 0; k < 200; ++k) {
    const double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    if (bet_growth(bet, x1) < bet_growth(bet, x2)) {
      a = x1;
    } else {
      b = x2;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_SUITE("portfolio_value") {

TEST_CASE("Kelly fraction and capacity for the even coin") {
  testing::LogBaseGuard bits(LogBase::bits);
  const BetSpec bet{0.5, 1.0, 2.0, 0.0};
  const auto k = kelly_optimal(bet);
  CHECK(k.q == 0.25);
  CHECK_FALSE(k.no_edge);
  CHECK(std::abs(bet_growth(bet, 0.25) - 0.5 * std::log2(9.0 / 8.0)) < 1e-12);
  CHECK(std::abs(golden_max(bet, 0.0, 1.0) - 0.25) < 1e-6);

  const auto cap = investment_capacity(bet);
  CHECK(cap.exact == doctest::Approx(0.5 * std::log2(9.0 / 8.0)).epsilon(1e-12));
  CHECK(cap.closed_form == doctest::Approx(cap.exact).epsilon(1e-12));
  CHECK(cap.full_bet_risk == doctest::Approx(1.5));
}

TEST_CASE("Kelly with a risk-free rate matches numeric maximization") {
  testing::Gen gen(3);
  for (int k = 0; k < 100; ++k) {
    const BetSpec bet{gen.uniform(0.3, 0.8), gen.uniform(0.2, 1.0), gen.uniform(0.5, 3.0),
                      gen.uniform(0.0, 0.1)};
    const auto kelly = kelly_optimal(bet);
    if (kelly.no_edge) {
      CHECK(bet_growth(bet, 0.01) < bet_growth(bet, 0.0));
      continue;
    }
    const double q = golden_max(bet, 0.0, 1.0);
    CHECK(std::abs(kelly.q - q) < 1e-5);
  }
  CHECK(kelly_optimal(BetSpec{0.5, 1.0, 1.0, 0.0}).no_edge);
  CHECK(investment_capacity(BetSpec{0.5, 1.0, 1.0, 0.0}).exact == 0.0);
  SEMG_CHECK_CODE(kelly_optimal(BetSpec{0.5, 1.5, 2.0, 0.0}), ErrorCode::invalid_argument);
}

TEST_CASE("small-edge approximation") {
  testing::LogBaseGuard bits(LogBase::bits);
  // edge-to-risk ratio 0.05 on an even coin
  const BetSpec bet{0.5, 1.0, 1.05 / 0.95, 0.0};
  const auto cap = investment_capacity(bet);
  CHECK(cap.edge_to_risk == doctest::Approx(0.05));
  CHECK(cap.closed_form == doctest::Approx(cap.exact).epsilon(1e-10));
  const double rel = std::abs(cap.approximation - cap.exact) / cap.exact;
  CHECK(rel < 3e-3);
  CHECK(rel > 2e-3);
}

TEST_CASE("risk measures") {
  const BetSpec coin{0.5, 1.0, 2.0, 0.0};
  const auto full = risk_measures(coin, 1.0);
  CHECK(full.arithmetic == doctest::Approx(1.5));
  CHECK(full.geometric == 0.0);
  CHECK(full.risk == doctest::Approx(1.5));
  CHECK(full.sin_alpha == doctest::Approx(1.0));

  testing::LogBaseGuard nats(LogBase::nats);
  const auto some = risk_measures(coin, 0.3);
  const double hg = bet_growth(coin, 0.3);
  CHECK(hg == doctest::Approx(0.5 * std::log(some.arithmetic - some.risk) +
                              0.5 * std::log(some.arithmetic + some.risk)));
}

TEST_CASE("optimal ratios over several assets") {
  testing::LogBaseGuard nats(LogBase::nats);
  // horse race with fair odds: proportional betting is optimal
  const std::vector<double> p{0.5, 0.3, 0.2};
  const Matrix odds = Matrix::from_rows({{2.0, 0, 0}, {0, 10.0 / 3.0, 0}, {0, 0, 5.0}});
  const auto q = optimal_ratios(p, odds);
  for (std::size_t i = 0; i < 3; ++i) CHECK(q[i] == doctest::Approx(p[i]).epsilon(1e-6));
  CHECK(growth_entropy(p, odds, q) == doctest::Approx(0.0).epsilon(1e-9));

  testing::Gen gen(8);
  for (int k = 0; k < 40; ++k) {
    const auto probs = gen.probs(3);
    Matrix ret(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      ret(i, 0) = 1.0;
      for (std::size_t c = 1; c < 3; ++c) ret(i, c) = gen.uniform(0.2, 2.5);
    }
    const auto best = optimal_ratios(probs, ret);
    const double g = growth_entropy(probs, ret, best);
    for (int t = 0; t < 50; ++t) {
      const auto other = gen.probs(3);
      CHECK(growth_entropy(probs, ret, other) <= g + 1e-9);
    }
  }
}

TEST_CASE("information value") {
  testing::LogBaseGuard bits(LogBase::bits);
  const std::vector<double> prior{0.5, 0.3, 0.2};
  const Matrix odds = Matrix::from_rows({{2.0, 0, 0}, {0, 10.0 / 3.0, 0}, {0, 0, 5.0}});
  const auto same = information_value(prior, prior, prior, odds);
  CHECK(std::abs(same.value) < 1e-9);

  // with proportional betting the value is the KL gain of the forecast
  const std::vector<double> pred{0.8, 0.1, 0.1};
  const auto right = information_value(prior, pred, pred, odds);
  CHECK(right.value == doctest::Approx(kl_divergence(pred, prior)).epsilon(1e-6));
  const std::vector<double> wrong{0.1, 0.1, 0.8};
  CHECK(information_value(prior, pred, wrong, odds).value < 0.0);

  CHECK(arrow_value(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
}

}  // TEST_SUITE
