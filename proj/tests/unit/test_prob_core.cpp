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

#include "semg/prob_core.hpp"
#include "unit_helpers.hpp"

using namespace semg;
using semg::testing::Gen;
using semg::testing::to_vec;

TEST_SUITE("prob_core") {

TEST_CASE("distributions validate and default identifiers") {
  const Source s({0.25, 0.75});
  CHECK(s.ids() == std::vector<std::string>{"x0", "x1"});
  const LabelDistribution l = LabelDistribution::uniform(3);
  CHECK(l.ids()[2] == "y2");
  CHECK(l[1] == doctest::Approx(1.0 / 3));
  SEMG_CHECK_CODE(Source({0.5, 0.6}), ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(Source({-0.1, 1.1}), ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(Source(std::vector<double>{}), ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(Source(std::vector<std::string>{"a"}, {0.5, 0.5}), ErrorCode::invalid_argument);
  CHECK(to_vec(Source::from_weights({1, 3}).probs()) == std::vector<double>{0.25, 0.75});
  CHECK(to_vec(Source::point_mass(3, 1).probs()) == std::vector<double>{0, 1, 0});
}

TEST_CASE("channels validate their shape and entries") {
  SEMG_CHECK_CODE(ShannonChannel(Matrix::from_rows({{0.5, 0.4}})), ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(SemanticChannel(Matrix::from_rows({{1.2, 0.4}})), ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(SemanticChannel(Matrix::from_rows({{1.0, 0.0}, {0.5, 0.0}})),
                  ErrorCode::invalid_argument);
  SEMG_CHECK_CODE(DistortionMatrix(Matrix::from_rows({{-1.0}})), ErrorCode::invalid_argument);
  const auto ch = ShannonChannel::from_row_weights(Matrix::from_rows({{1, 3}, {2, 2}}));
  CHECK(ch(0, 1) == doctest::Approx(0.75));
  CHECK(ch(1, 0) == doctest::Approx(0.5));
  const auto joint = JointDistribution::from(Source({0.5, 0.5}), ch);
  CHECK(joint.label_marginal()[0] == doctest::Approx(0.375));
  CHECK(joint.instance_marginal()[1] == doctest::Approx(0.5));
}

TEST_CASE("semantic Bayes worked examples") {
  const Source uniform4 = Source::uniform(4);
  auto taut = semantic_bayes(uniform4, std::vector<double>{1, 1, 1, 1});
  CHECK(taut.logical_prob == doctest::Approx(1.0));
  for (double p : taut.posterior) CHECK(p == doctest::Approx(0.25));

  auto crisp = semantic_bayes(uniform4, std::vector<double>{0, 0, 1, 1});
  CHECK(crisp.logical_prob == doctest::Approx(0.5));
  CHECK(crisp.posterior == std::vector<double>{0, 0, 0.5, 0.5});

  const Source s({0.5, 0.3, 0.2});
  auto pred = semantic_bayes(s, std::vector<double>{1.0, 0.5, 0.0});
  CHECK(pred.logical_prob == doctest::Approx(0.65));
  CHECK(pred.posterior[0] == doctest::Approx(0.5 / 0.65));
  CHECK(pred.posterior[1] == doctest::Approx(0.15 / 0.65));
  CHECK(pred.posterior[2] == 0.0);

  SEMG_CHECK_CODE(semantic_bayes(Source({1.0, 0.0}), std::vector<double>{0, 1}),
                  ErrorCode::all_zero_overlap);
}

TEST_CASE("truth from likelihood worked examples") {
  const Source s({0.5, 0.3, 0.2});
  const auto same = truth_from_likelihood(s, s.probs());
  for (double t : same) CHECK(t == doctest::Approx(1.0));
  const auto crisp = truth_from_likelihood(Source::uniform(4), std::vector<double>{0.5, 0.5, 0, 0});
  CHECK(crisp == std::vector<double>{1, 1, 0, 0});
  const auto back = truth_from_likelihood(s, std::vector<double>{0.5 / 0.65, 0.15 / 0.65, 0});
  CHECK(back[0] == doctest::Approx(1.0));
  CHECK(back[1] == doctest::Approx(0.5));
  CHECK(back[2] == 0.0);
  SEMG_CHECK_CODE(truth_from_likelihood(Source({1.0, 0.0}), std::vector<double>{0.5, 0.5}),
                  ErrorCode::domain_mismatch);
}

TEST_CASE("property: Bayes round trip and scale invariance") {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.index(1, 9);
    const Source s(gen.probs(n));
    std::vector<double> truth(n);
    double top = 0;
    for (auto& t : truth) top = std::max(top, t = gen.uniform(0.0, 1.0));
    if (top <= 0) continue;
    for (auto& t : truth) t /= top;
    const auto pred = semantic_bayes(s, truth);

    // logical probability is the source-weighted mean
    long double mean = 0;
    for (std::size_t i = 0; i < n; ++i) mean += static_cast<long double>(s[i]) * truth[i];
    CHECK(pred.logical_prob == doctest::Approx(static_cast<double>(mean)).epsilon(1e-14));

    const auto back = truth_from_likelihood(s, pred.posterior);
    for (std::size_t i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(truth[i]).epsilon(1e-12));

    const double k = gen.uniform(0.01, 0.99);
    std::vector<double> scaled(truth);
    for (auto& t : scaled) t *= k;
    const auto pred2 = semantic_bayes(s, scaled);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(pred2.posterior[i] == doctest::Approx(pred.posterior[i]).epsilon(1e-12));
  }
}

TEST_CASE("distortion and truth conversions") {
  testing::LogBaseGuard bits(LogBase::bits);
  CHECK(truth_to_distortion(1.0) == 0.0);
  CHECK(std::isinf(truth_to_distortion(0.0)));
  CHECK(distortion_to_truth(HUGE_VAL) == 0.0);
  CHECK(truth_to_distortion(0.25) == doctest::Approx(2.0));
  {
    testing::LogBaseGuard nats(LogBase::nats);
    CHECK(truth_to_distortion(std::exp(-1.5)) == doctest::Approx(1.5));
  }
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const double t = gen.uniform();
    CHECK(distortion_to_truth(truth_to_distortion(t)) == doctest::Approx(t).epsilon(1e-12));
  }
  const auto sem = SemanticChannel(Matrix::from_rows({{1.0, 0.0}, {0.5, 1.0}}));
  const auto d = truth_to_distortion(sem);
  CHECK(std::isinf(d(0, 1)));
  CHECK(d(1, 0) == doctest::Approx(1.0));
  CHECK(distortion_to_truth(d).matrix() == sem.matrix());
}

TEST_CASE("gaussian truth") {
  const std::vector<double> v{-1, 0, 1, 2};
  const auto t = gaussian_truth(v, 0.0, 1.0);
  CHECK(t[1] == 1.0);
  CHECK(t[0] == doctest::Approx(std::exp(-0.5)));
  CHECK(t[2] == doctest::Approx(0.6065306597));
  for (double x : gaussian_truth(v, 0.0, 1e6)) CHECK(x == doctest::Approx(1.0));
  SEMG_CHECK_CODE(gaussian_truth(v, 0.0, 0.0), ErrorCode::non_positive_sigma);
  SEMG_CHECK_CODE(gaussian_truth(v, 0.0, -1.0), ErrorCode::non_positive_sigma);
}

TEST_CASE("output distribution and logical probabilities") {
  const Source s({0.6, 0.4});
  const ShannonChannel ch(Matrix::from_rows({{0.9, 0.1}, {0.2, 0.8}}));
  const auto py = output_distribution(s, ch);
  CHECK(py[0] == doctest::Approx(0.62));
  CHECK(py[1] == doctest::Approx(0.38));
  const SemanticChannel sem(Matrix::from_rows({{1.0, 0.2}, {0.2, 1.0}}));
  const auto tj = logical_probabilities(s, sem);
  CHECK(tj[0] == doctest::Approx(0.68));
  CHECK(tj[1] == doctest::Approx(0.52));
  CHECK(index_values(3) == std::vector<double>{0, 1, 2});
}

}  // TEST_SUITE
