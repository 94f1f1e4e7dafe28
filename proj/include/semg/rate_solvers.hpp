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
#include <span>
#include <vector>

#include "semg/prob_core.hpp"

namespace semg {

// Finite stand-in for s -> infinity. At or above this slope, channel rows
// whose largest entry exceeds 1 - kOneHotSnap are snapped to exact one-hot.
inline constexpr double kInfiniteSlope = 200.0;
inline constexpr double kOneHotSnap = 1e-9;

struct SolverOptions {
  double tol = 1e-8;   // max-norm change of P(y) between iterations
  int max_iter = 2000;
};

// Invoked after every channel update with the iteration number (1-based),
// the new channel and the label distribution it was computed from.
using IterationCallback =
    std::function<void(int iteration, const ShannonChannel& channel,
                       std::span<const double> label_probs)>;

struct RGPoint {
  double s = 0.0;
  double R = 0.0;  // Shannon MI of the channel
  double G = 0.0;  // semantic MI of the channel
  ShannonChannel channel;
  LabelDistribution label_dist;
  int iterations = 0;
  bool converged = false;
};

struct RGCurve {
  Source source;
  SemanticChannel sem;
  std::vector<RGPoint> points;
};

struct CurveOptions {
  SolverOptions solver;
  // Start each point from the previous point's label distribution. Points
  // are then solved in order; without warm starts they may run in parallel.
  bool warm_start = true;
  unsigned jobs = 1;
};

// P(y_j|x_i) proportional to P(y_j) m_ij^s with m_ij = T(theta_j|x_i)/T(theta_j),
// evaluated in the log domain. Labels with P(y_j) = 0 receive no mass.
ShannonChannel mid_channel_step(const Source& source, const LabelDistribution& label_dist,
                                const SemanticChannel& sem, double s);

// sum_i P(x_i) P(y_j|x_i).
LabelDistribution mid_marginal_step(const Source& source, const ShannonChannel& channel);

// Alternates the two steps from init until the label distribution settles.
// s = 0 is resolved as the s -> 0+ limit: the single label with the largest
// average information is used for every instance.
RGPoint solve_rg_point(const Source& source, const SemanticChannel& sem, double s,
                       const LabelDistribution& init, const SolverOptions& options = {},
                       const IterationCallback& callback = {});
RGPoint solve_rg_point(const Source& source, const SemanticChannel& sem, double s,
                       const SolverOptions& options = {});

// s_grid must be sorted ascending.
RGCurve solve_rg_curve(const Source& source, const SemanticChannel& sem,
                       std::span<const double> s_grid, const CurveOptions& options = {});

struct RDPoint {
  double s = 0.0;
  double R = 0.0;  // Shannon MI
  double D = 0.0;  // average distortion -log T in the configured unit
  ShannonChannel channel;
  LabelDistribution label_dist;
  int iterations = 0;
  bool converged = false;
};

// Channel step P(y_j|x_i) proportional to P(y_j) T(theta_j|x_i)^s.
RDPoint solve_rd_semantic(const Source& source, const SemanticChannel& constraint, double s,
                          const LabelDistribution& init, const SolverOptions& options = {});
RDPoint solve_rd_semantic(const Source& source, const SemanticChannel& constraint, double s,
                          const SolverOptions& options = {});
RDPoint solve_rd_semantic(const Source& source, const DistortionMatrix& distortion, double s,
                          const SolverOptions& options = {});

// Bisection on s for the point whose average distortion equals target.
// Targets at or above the distortion of the best constant label return s = 0.
RDPoint solve_rd_for_distortion(const Source& source, const DistortionMatrix& distortion,
                                double target, const SolverOptions& options = {});

struct CapacityOptions {
  double s = kInfiniteSlope;
  double initial_step = 0.25;  // probability mass moved per trial
  double min_step = 1e-7;
  int max_sweeps_per_step = 200;
  SolverOptions solver;
};

struct CapacityResult {
  Source source;       // maximizing P(x)
  double capacity = 0.0;
  std::vector<std::size_t> peaks;  // argmax_x T(theta_j|x) per label
  bool duplicate_peak = false;     // several labels share a peak instance
  RGPoint point;                   // solve at the maximizing source
  int evaluations = 0;
};

// Starts from the uniform source over the peak instances of the truth
// functions and refines P(x) by pairwise mass transfers that increase the
// semantic MI reached at a large slope.
CapacityResult semantic_channel_capacity(const SemanticChannel& sem,
                                         const CapacityOptions& options = {});

enum class GrayFamily { gaussian, crisp };

struct GrayDemoConfig {
  int levels = 256;
  int n_labels = 8;
  GrayFamily family = GrayFamily::gaussian;
  double sigma0 = 0.0;  // <= 0 selects levels / 24
  double beta = 2.0;    // widening of sigma and spacing with gray level
  double s = 1.0;
  SolverOptions solver;
  bool with_limit = true;  // also solve at kInfiniteSlope for G_max
};

struct GrayTraceRecord {
  int iteration = 0;
  double R = 0.0;
  double G = 0.0;
};

struct GrayDemoReport {
  Source source;
  SemanticChannel sem;
  std::vector<double> centers;
  std::vector<double> sigmas;
  RGPoint point;  // at config.s
  RGPoint limit;  // at kInfiniteSlope when requested
  std::vector<GrayTraceRecord> trace;
};

// Uniform source over the gray levels; label truth functions get wider and
// sparser as the gray level grows.
GrayDemoReport gray_compression_demo(const GrayDemoConfig& config);

// Only the truth functions (and their centers and widths).
GrayDemoReport gray_truth_functions(const GrayDemoConfig& config);

}  // namespace semg
