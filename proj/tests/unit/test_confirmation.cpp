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

#include "semg/confirmation.hpp"
#include "unit_helpers.hpp"

using namespace semg;

TEST_SUITE("confirmation") {

TEST_CASE("symmetric table") {
  const ContingencyTable t{9, 1, 1, 9};
  CHECK(t.positive_likelihood_ratio() == doctest::Approx(9.0));
  CHECK(channel_confirmation(t) == doctest::Approx(8.0 / 9.0));
  CHECK(prediction_confirmation(t) == doctest::Approx(8.0 / 9.0));
  CHECK(causal_probability(t) == doctest::Approx(8.0 / 9.0));
  CHECK(causal_confirmation(t) == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("limits and signs") {
  const ContingencyTable no_counter{5, 3, 0, 4};
  CHECK(channel_confirmation(no_counter) == 1.0);
  CHECK(prediction_confirmation(no_counter) == 1.0);
  CHECK(causal_probability(no_counter) == 1.0);
  CHECK(causal_confirmation(no_counter) == 1.0);

  const ContingencyTable indep{2, 2, 3, 3};
  CHECK(channel_confirmation(indep) == 0.0);
  CHECK(causal_confirmation(indep) == 0.0);

  const ContingencyTable against{1, 9, 9, 1};
  CHECK(channel_confirmation(against) == doctest::Approx(-8.0 / 9.0));
  CHECK(causal_probability(against) == 0.0);
  CHECK(causal_confirmation(against) == doctest::Approx(-8.0 / 9.0));

  SEMG_CHECK_CODE(channel_confirmation(ContingencyTable{0, 0, 1, 1}), ErrorCode::undefined_conditional);
  SEMG_CHECK_CODE(prediction_confirmation(ContingencyTable{0, 1, 0, 1}), ErrorCode::undefined_conditional);
  SEMG_CHECK_CODE(channel_confirmation(ContingencyTable{-1, 1, 1, 1}), ErrorCode::invalid_argument);
}

TEST_CASE("causal measures agree on supporting evidence") {
  testing::Gen gen(23);
  for (int k = 0; k < 300; ++k) {
    const ContingencyTable t{gen.uniform(0.1, 50), gen.uniform(0.1, 50), gen.uniform(0.1, 50),
                             gen.uniform(0.1, 50)};
    const double r = t.positive_likelihood_ratio();
    CHECK(r == doctest::Approx(t.a / (t.a + t.b) * (t.c + t.d) / t.c));
    if (r >= 1.0) {
      CHECK(causal_confirmation(t) == causal_probability(t));
      CHECK(channel_confirmation(t) == doctest::Approx(causal_confirmation(t)));
    } else {
      CHECK(causal_probability(t) == 0.0);
      CHECK(causal_confirmation(t) == doctest::Approx(r - 1.0));
    }
    CHECK(std::abs(channel_confirmation(t)) <= 1.0);
    CHECK(std::abs(prediction_confirmation(t)) <= 1.0);
  }
}

TEST_CASE("belief truth functions") {
  const BeliefTruthFunction pos{{0, 1, 1}, 0.75};
  CHECK(pos.disbelief() == doctest::Approx(0.25));
  const auto tp = pos.composed();
  CHECK(tp[0] == doctest::Approx(0.25));
  CHECK(tp[1] == 1.0);

  const BeliefTruthFunction neg{{0, 1, 1}, -0.75};
  const auto tn = neg.composed();
  CHECK(tn[0] == 1.0);
  CHECK(tn[1] == doctest::Approx(0.25));

  SEMG_CHECK_CODE((BeliefTruthFunction{{0, 1}, 1.5}.composed()), ErrorCode::invalid_argument);
}

TEST_CASE("prediction with a confirmation degree") {
  const Source base({0.7, 0.3});
  const auto sure = predict_with_confirmation(1.0, base);
  CHECK(sure[0] == 0.0);
  CHECK(sure[1] == 1.0);
  const auto none = predict_with_confirmation(0.0, base);
  CHECK(none[1] == doctest::Approx(0.3));
  const auto half = predict_with_confirmation(0.5, base);
  CHECK(half[1] == doctest::Approx(0.3 / (0.3 + 0.7 * 0.5)));
  const auto negated = predict_with_confirmation(-1.0, base);
  CHECK(negated[0] == 1.0);
  SEMG_CHECK_CODE(predict_with_confirmation(0.5, Source({0.2, 0.3, 0.5})), ErrorCode::invalid_argument);
}

}  // TEST_SUITE
