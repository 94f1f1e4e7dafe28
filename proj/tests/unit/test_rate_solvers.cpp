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
#include "semg/info_measures.hpp"
#include "semg/rate_solvers.hpp"
#include "unit_helpers.hpp"

using namespace semg;
using semg::testing::Gen;
using semg::testing::to_vec;

namespace {

// sum_i P(x_i) P(y_j|x_i) log(T_ij / T_j) on a given channel, in units.
double definition_g(const Source& s, const ShannonChannel& ch, const SemanticChannel& sem) {
  return testing::oracle_semantic_mi(to_vec(s.probs()), ch.matrix(), sem.matrix());
}

double definition_r(const Source& s, const ShannonChannel& ch) {
  return testing::oracle_mi(to_vec(s.probs()), ch.matrix());
}

}  // namespace

TEST_SUITE("rate_solvers") {

TEST_CASE("channel step limits") {
  const Source s({0.5, 0.3, 0.2});
  const SemanticChannel sem(Matrix::from_rows({{1.0, 0.1}, {0.5, 0.6}, {0.1, 1.0}}));
  const LabelDistribution py({0.3, 0.7});
  const auto flat = mid_channel_step(s, py, sem, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(flat(i, 0) == doctest::Approx(0.3));
    CHECK(flat(i, 1) == doctest::Approx(0.7));
  }
  const auto sharp = mid_channel_step(s, py, sem, kInfiniteSlope);
  CHECK(sharp(0, 0) > 1 - 1e-9);
  CHECK(sharp(2, 1) > 1 - 1e-9);

  // zero-probability labels get no mass
  const auto one = mid_channel_step(s, LabelDistribution({1.0, 0.0}), sem, 1.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(one(i, 1) == 0.0);

  // no admissible label for a row with positive mass
  const SemanticChannel holes(Matrix::from_rows({{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}}));
  SEMG_CHECK_CODE(mid_channel_step(s, LabelDistribution({0.5, 0.5}), holes, 1.0),
                  ErrorCode::degenerate_row);
}

TEST_CASE("property: channel rows are stochastic") {
  Gen gen(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.index(1, 8), m = gen.index(1, 6);
    const Source s(gen.probs(n));
    const SemanticChannel sem(gen.truth(n, m));
    const LabelDistribution py(gen.probs(m));
    const double slope = gen.uniform(-5, 50);
    const auto ch = mid_channel_step(s, py, sem, slope);
    for (std::size_t i = 0; i < n; ++i) {
      double total = 0;
      for (std::size_t j = 0; j < m; ++j) total += ch(i, j);
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("marginal step") {
  const auto id = ShannonChannel(Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto py = mid_marginal_step(Source::uniform(3), id);
  for (double p : py.probs()) CHECK(p == doctest::Approx(1.0 / 3));
  const auto c = ShannonChannel(Matrix::from_rows({{0.2, 0.8}, {0.2, 0.8}}));
  CHECK(mid_marginal_step(Source({0.9, 0.1}), c)[1] == doctest::Approx(0.8));
}

TEST_CASE("matched fixed point at s = 1") {
  testing::LogBaseGuard bits(LogBase::bits);
  const Source s({0.5, 0.3, 0.2});
  const ShannonChannel ch(Matrix::from_rows({{0.8, 0.2}, {0.5, 0.5}, {0.1, 0.9}}));
  const auto py = mid_marginal_step(s, ch);
  // truth functions proportional to P(y|x) reproduce the channel at s = 1
  SemanticChannel sem(Matrix::from_rows({{0.8 / 0.8, 0.2 / 0.9}, {0.5 / 0.8, 0.5 / 0.9},
                                         {0.1 / 0.8, 0.9 / 0.9}}));
  const auto next = mid_channel_step(s, py, sem, 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(next(i, j) == doctest::Approx(ch(i, j)).epsilon(1e-12));
  const auto pt = solve_rg_point(s, sem, 1.0, py);
  CHECK(std::abs(pt.R - pt.G) < 1e-9);
}

TEST_CASE("rg point values agree with the definitions") {
  testing::LogBaseGuard bits(LogBase::bits);
  const auto f = fixtures::binary_communication();
  for (double slope : {0.5, 1.0, 2.0, 5.0, -1.0}) {
    const auto pt = solve_rg_point(f.source, f.sem, slope, SolverOptions{1e-12, 100000});
    CAPTURE(slope);
    CHECK(pt.converged);
    CHECK(pt.R == doctest::Approx(definition_r(f.source, pt.channel)).epsilon(1e-8));
    CHECK(pt.G == doctest::Approx(definition_g(f.source, pt.channel, f.sem)).epsilon(1e-8));
    CHECK(pt.R - pt.G >= -1e-9);
    const auto py = mid_marginal_step(f.source, pt.channel);
    for (std::size_t j = 0; j < py.size(); ++j)
      CHECK(py[j] == doctest::Approx(pt.label_dist[j]).epsilon(1e-12));
  }
  const auto at1 = solve_rg_point(f.source, f.sem, 1.0);
  CHECK(std::abs(at1.R - at1.G) < 1e-6);
}

TEST_CASE("tautologies carry no information at any slope") {
  const Source s({0.2, 0.3, 0.5});
  const SemanticChannel taut(Matrix(3, 2, 1.0));
  for (double slope : {0.0, 1.0, 10.0, kInfiniteSlope}) {
    const auto pt = solve_rg_point(s, taut, slope);
    CHECK(std::abs(pt.G) < 1e-12);
    CHECK(std::abs(pt.R) < 1e-12);
  }
}

TEST_CASE("s = 0 uses the best constant label") {
  const Source s({0.5, 0.3, 0.2});
  const SemanticChannel sem(Matrix::from_rows({{1.0, 0.3}, {0.2, 1.0}, {0.1, 1.0}}));
  const auto pt = solve_rg_point(s, sem, 0.0);
  CHECK(pt.R == 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(pt.channel(i, 1) == 1.0);
  // oracle: the label maximizing the average log ratio
  const auto tj = logical_probabilities(s, sem);
  double best = -HUGE_VAL;
  for (std::size_t j = 0; j < 2; ++j) {
    double g = 0;
    for (std::size_t i = 0; i < 3; ++i) g += s[i] * std::log(sem(i, j) / tj[j]);
    best = std::max(best, g);
  }
  CHECK(pt.G == doctest::Approx(to_units(best)));
}

TEST_CASE("property: curve monotone on the right branch and bounded by the Shannon rate") {
  Gen gen(52);
  const std::vector<double> grid{0.25, 0.5, 1, 2, 4, 8, 16};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.index(2, 6), m = gen.index(2, 4);
    const Source s(gen.probs(n));
    const SemanticChannel sem(gen.truth(n, m));
    CurveOptions opts;
    opts.solver = {1e-12, 50000};
    const auto curve = solve_rg_curve(s, sem, grid, opts);
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
      const auto& p = curve.points[k];
      CHECK(p.R - p.G >= -1e-9);
      if (k > 0) {
        CHECK(p.G >= curve.points[k - 1].G - 1e-7);
        CHECK(p.R >= curve.points[k - 1].R - 1e-7);
      }
      if (p.converged) CHECK(p.R == doctest::Approx(definition_r(s, p.channel)).epsilon(1e-6));
    }
  }
}

TEST_CASE("parallel and serial curves agree") {
  const auto f = fixtures::binary_communication();
  CurveOptions serial;
  serial.warm_start = false;
  CurveOptions parallel = serial;
  parallel.jobs = 4;
  const auto a = solve_rg_curve(f.source, f.sem, f.s_grid, serial);
  const auto b = solve_rg_curve(f.source, f.sem, f.s_grid, parallel);
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].R == b.points[k].R);
    CHECK(a.points[k].G == b.points[k].G);
  }
  SEMG_CHECK_CODE(solve_rg_curve(f.source, f.sem, std::vector<double>{2, 1}),
                  ErrorCode::invalid_argument);
}

TEST_CASE("rate distortion: Hamming closed form") {
  testing::LogBaseGuard bits(LogBase::bits);
  const Source s = Source::uniform(2);
  const DistortionMatrix ham(Matrix::from_rows({{0, 1}, {1, 0}}));
  for (double d : {0.05, 0.1, 0.2, 0.3}) {
    const auto pt = solve_rd_for_distortion(s, ham, d, SolverOptions{1e-13, 100000});
    CAPTURE(d);
    CHECK(pt.D == doctest::Approx(d).epsilon(1e-8));
    CHECK(pt.R == doctest::Approx(1 - testing::binary_entropy_bits(d)).epsilon(1e-6));
  }
  const auto flat = solve_rd_for_distortion(s, ham, 0.7);
  CHECK(flat.s == 0.0);
  CHECK(flat.R == 0.0);
  CHECK(flat.D == doctest::Approx(0.5));
}

TEST_CASE("rate distortion at zero distortion with crisp partitions") {
  testing::LogBaseGuard bits(LogBase::bits);
  const Source s({0.1, 0.2, 0.3, 0.15, 0.25});
  const SemanticChannel crisp(Matrix::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
  const auto pt = solve_rd_semantic(s, crisp, 1.0);
  CHECK(pt.D == 0.0);
  const auto tj = logical_probabilities(s, crisp);
  double h = 0;
  for (std::size_t j = 0; j < 3; ++j) h -= pt.label_dist[j] * std::log2(tj[j]);
  CHECK(pt.R == doctest::Approx(h).epsilon(1e-9));
}

TEST_CASE("capacity") {
  testing::LogBaseGuard bits(LogBase::bits);
  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    const auto c = semantic_channel_capacity(fixtures::disjoint_crisp(n));
    CHECK(c.capacity == doctest::Approx(std::log2(static_cast<double>(n))).epsilon(1e-9));
    CHECK_FALSE(c.duplicate_peak);
  }
  const SemanticChannel same(Matrix::from_rows({{1, 1}, {0.5, 0.5}, {0.2, 0.2}}));
  const auto c2 = semantic_channel_capacity(same);
  CHECK(c2.capacity < 1.0);
  CHECK(c2.duplicate_peak);

  // 3-point alphabet, dense simplex grid oracle of the large-slope value
  const SemanticChannel sem(Matrix::from_rows({{1.0, 0.3}, {0.6, 0.6}, {0.3, 1.0}}));
  double oracle = -HUGE_VAL;
  const int steps = 200;
  for (int a = 0; a <= steps; ++a)
    for (int b = 0; a + b <= steps; ++b) {
      const std::vector<double> p{a / double(steps), b / double(steps), (steps - a - b) / double(steps)};
      const auto tj = testing::oracle_logical(p, sem.matrix());
      if (tj[0] <= 0 || tj[1] <= 0) continue;
      double g = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        if (p[i] == 0) continue;
        g += p[i] * std::max(std::log2(sem(i, 0) / tj[0]), std::log2(sem(i, 1) / tj[1]));
      }
      oracle = std::max(oracle, g);
    }
  const auto c3 = semantic_channel_capacity(sem);
  CHECK(c3.capacity < 1.0);
  CHECK(c3.capacity == doctest::Approx(oracle).epsilon(1e-3));
  CHECK(c3.capacity >= oracle - 1e-9);
}

TEST_CASE("gray demo") {
  testing::LogBaseGuard bits(LogBase::bits);
  GrayDemoConfig crisp;
  crisp.levels = 16;
  crisp.n_labels = 16;
  crisp.family = GrayFamily::crisp;
  const auto lossless = gray_compression_demo(crisp);
  CHECK(lossless.point.R == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(lossless.point.G == doctest::Approx(4.0).epsilon(1e-9));

  GrayDemoConfig small;
  small.levels = 64;
  small.n_labels = 4;
  const auto rep = gray_compression_demo(small);
  CHECK(rep.point.converged);
  // four labels leave gaps between the truth functions, so R > G here
  CHECK(rep.point.R > rep.point.G);
  CHECK(rep.limit.G >= rep.point.G);
  REQUIRE_FALSE(rep.trace.empty());
  CHECK(rep.trace.front().iteration == 1);
  CHECK(rep.centers.size() == 4);
  for (std::size_t j = 1; j < rep.centers.size(); ++j) {
    CHECK(rep.centers[j] > rep.centers[j - 1]);
    CHECK(rep.sigmas[j] >= rep.sigmas[j - 1]);
  }
  const auto full = gray_compression_demo(GrayDemoConfig{});
  CHECK(full.point.converged);
  CHECK(std::abs(full.point.R - full.point.G) / full.point.R < 1e-3);

  GrayDemoConfig bad;
  bad.levels = 1;
  SEMG_CHECK_CODE(gray_compression_demo(bad), ErrorCode::invalid_argument);
}

}  // TEST_SUITE
