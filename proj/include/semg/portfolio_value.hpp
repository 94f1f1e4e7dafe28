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

#include <span>
#include <string>
#include <vector>

#include "semg/matrix.hpp"

namespace semg {

// W outcomes, N securities plus cash. returns(i, k) is the output ratio of
// asset k in outcome i; column 0 is cash. ratios are the portfolio weights.
struct PortfolioSpec {
  std::vector<double> probs;
  Matrix returns;
  std::vector<double> ratios;
  std::vector<std::string> labels;

  void validate() const;
};

// Two-outcome bet: lose r1 of the stake with probability 1 - p, gain r2 with
// probability p; idle capital earns r0.
struct BetSpec {
  double win_prob = 0.5;
  double r1 = 1.0;
  double r2 = 1.0;
  double r0 = 0.0;
  bool limited_liability = true;  // requires r1 <= 1

  void validate() const;
  double expected_income() const;  // p r2 - (1 - p) r1
};

// R_i(q) = sum_k q_k R_ik.
std::vector<double> outcome_ratios(const Matrix& returns, std::span<const double> ratios);

// sum_i P_i log R_i(q); -infinity when a possible outcome has R_i(q) <= 0.
double growth_entropy(std::span<const double> probs, const Matrix& returns,
                      std::span<const double> ratios);
double growth_entropy(const PortfolioSpec& spec);

// Two-column portfolio (cash, bet) equivalent to betting fraction q.
PortfolioSpec bet_portfolio(const BetSpec& bet, double q);
double bet_growth(const BetSpec& bet, double q);

struct KellyResult {
  double q = 0.0;
  bool no_edge = false;
};

// Closed-form growth-optimal fraction, clipped to [0, 1].
KellyResult kelly_optimal(const BetSpec& bet);

struct RiskMeasures {
  double arithmetic = 0.0;  // R_a, expected output ratio
  double geometric = 0.0;   // R_g, exp of the growth entropy
  double risk = 0.0;        // R_r = sqrt(R_a^2 - R_g^2)
  double sin_alpha = 0.0;   // R_r / R_a
};

RiskMeasures risk_measures(std::span<const double> probs, std::span<const double> outcome_ratio);
RiskMeasures risk_measures(const PortfolioSpec& spec);
RiskMeasures risk_measures(const BetSpec& bet, double q);

struct InvestmentCapacity {
  double exact = 0.0;           // growth at the optimal fraction
  double q_star = 0.0;
  bool no_edge = false;
  double full_bet_risk = 0.0;   // std of the q = 1 return
  double edge_to_risk = 0.0;    // E / full_bet_risk
  // 0.5 log(1 / (1 - (E/R_r)^2)); exact for the even coin without a
  // risk-free rate, NaN when R_r <= |E|.
  double closed_form = 0.0;
  double approximation = 0.0;   // 0.5 log(1 + (E/R_r)^2)
};

InvestmentCapacity investment_capacity(const BetSpec& bet);

struct SimplexOptions {
  double tol = 1e-12;
  int max_sweeps = 500;
};

// Growth-optimal long-only, fully invested ratios by pairwise coordinate ascent.
std::vector<double> optimal_ratios(std::span<const double> probs, const Matrix& returns,
                                   const SimplexOptions& options = {});

struct InformationValue {
  double value = 0.0;               // sum_i P(x_i|y_j) log(R_i(q**) / R_i(q*))
  std::vector<double> q_prior;      // q*
  std::vector<double> q_posterior;  // q**
  std::vector<double> pointwise;    // log(R_i(q**) / R_i(q*)) per outcome
};

InformationValue information_value(std::span<const double> prior,
                                   std::span<const double> posterior_pred,
                                   std::span<const double> realized, const Matrix& returns,
                                   const SimplexOptions& options = {});

// Shannon entropy of the outcome distribution.
double arrow_value(std::span<const double> probs);

}  // namespace semg
