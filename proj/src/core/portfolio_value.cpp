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

#include "semg/portfolio_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/numeric.hpp"
#include "semg/info_measures.hpp"

namespace semg {

using detail::negligible;
using detail::require_arg;

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void PortfolioSpec::validate() const {
  detail::check_probability_vector(probs, "portfolio outcome probabilities");
  detail::require_same_size(returns.rows(), probs.size(), "portfolio returns (outcomes)");
  detail::require_same_size(returns.cols(), ratios.size(), "portfolio ratios");
  if (!labels.empty()) detail::require_same_size(labels.size(), ratios.size(), "portfolio labels");
  for (double r : returns.data())
    require_arg(std::isfinite(r) && r >= 0.0, "output ratios must be finite and >= 0");
}

void BetSpec::validate() const {
  require_arg(win_prob >= 0.0 && win_prob <= 1.0, "win probability must lie in [0, 1]");
  require_arg(std::isfinite(r1) && r1 > 0.0, "loss fraction r1 must be positive");
  require_arg(std::isfinite(r2) && r2 > 0.0, "gain fraction r2 must be positive");
  require_arg(std::isfinite(r0) && r0 >= 0.0, "risk-free rate r0 must be >= 0");
  require_arg(!limited_liability || r1 <= 1.0, "loss fraction r1 exceeds 1 for a limited-liability bet");
}

double BetSpec::expected_income() const { return win_prob * r2 - (1.0 - win_prob) * r1; }

std::vector<double> outcome_ratios(const Matrix& returns, std::span<const double> ratios) {
  detail::require_same_size(returns.cols(), ratios.size(), "portfolio ratios");
  std::vector<double> out(returns.rows(), 0.0);
  for (std::size_t i = 0; i < returns.rows(); ++i)
    for (std::size_t k = 0; k < returns.cols(); ++k) out[i] += ratios[k] * returns(i, k);
  return out;
}

double growth_entropy(std::span<const double> probs, const Matrix& returns,
                      std::span<const double> ratios) {
  detail::require_same_size(probs.size(), returns.rows(), "growth entropy outcomes");
  double sum = 0.0;
  for (double q : ratios) {
    require_arg(std::isfinite(q), "portfolio ratios must be finite");
    sum += q;
  }
  require_arg(std::abs(sum - 1.0) <= kSumTolerance, "portfolio ratios must sum to one");
  const auto r = outcome_ratios(returns, ratios);
  double h = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (negligible(probs[i])) continue;
    if (r[i] <= 0.0) return kNegInf;
    h += probs[i] * std::log(r[i]);
  }
  return to_units(h);
}

double growth_entropy(const PortfolioSpec& spec) {
  spec.validate();
  return growth_entropy(spec.probs, spec.returns, spec.ratios);
}

PortfolioSpec bet_portfolio(const BetSpec& bet, double q) {
  bet.validate();
  require_arg(std::isfinite(q), "bet fraction must be finite");
  PortfolioSpec spec;
  spec.probs = {1.0 - bet.win_prob, bet.win_prob};
  const double cash = 1.0 + bet.r0;
  spec.returns = Matrix::from_rows({{cash, 1.0 - bet.r1}, {cash, 1.0 + bet.r2}});
  spec.ratios = {1.0 - q, q};
  spec.labels = {"cash", "bet"};
  return spec;
}

double bet_growth(const BetSpec& bet, double q) {
  const auto spec = bet_portfolio(bet, q);
  return growth_entropy(spec.probs, spec.returns, spec.ratios);
}

KellyResult kelly_optimal(const BetSpec& bet) {
  bet.validate();
  const double p2 = bet.win_prob, p1 = 1.0 - p2;
  const double big_r0 = 1.0 + bet.r0;
  const double d1 = bet.r1 + bet.r0;
  const double d2 = bet.r2 - bet.r0;
  KellyResult out;
  if (d2 <= 0.0) {
    out.no_edge = true;
    return out;
  }
  const double q = (p2 * d2 - p1 * d1) * big_r0 / (d1 * d2);
  if (q <= 0.0) {
    out.no_edge = true;
    return out;
  }
  out.q = std::min(q, 1.0);
  return out;
}

RiskMeasures risk_measures(std::span<const double> probs, std::span<const double> outcome_ratio) {
  detail::require_same_size(probs.size(), outcome_ratio.size(), "risk measures");
  detail::check_probability_vector(probs, "risk measure probabilities");
  RiskMeasures m;
  double log_g = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (negligible(probs[i])) continue;
    m.arithmetic += probs[i] * outcome_ratio[i];
    log_g = outcome_ratio[i] > 0.0 ? log_g + probs[i] * std::log(outcome_ratio[i]) : kNegInf;
  }
  m.geometric = std::exp(log_g);
  m.risk = std::sqrt(std::max(0.0, m.arithmetic * m.arithmetic - m.geometric * m.geometric));
  m.sin_alpha = m.arithmetic > 0.0 ? m.risk / m.arithmetic : 0.0;
  return m;
}

RiskMeasures risk_measures(const PortfolioSpec& spec) {
  spec.validate();
  return risk_measures(spec.probs, outcome_ratios(spec.returns, spec.ratios));
}

RiskMeasures risk_measures(const BetSpec& bet, double q) { return risk_measures(bet_portfolio(bet, q)); }

InvestmentCapacity investment_capacity(const BetSpec& bet) {
  const auto k = kelly_optimal(bet);
  InvestmentCapacity c;
  c.q_star = k.q;
  c.no_edge = k.no_edge;
  c.exact = k.no_edge ? 0.0 : bet_growth(bet, k.q);
  const double p2 = bet.win_prob, p1 = 1.0 - p2;
  const double e = bet.expected_income();
  c.full_bet_risk = std::sqrt(p1 * p2) * (bet.r1 + bet.r2);
  c.edge_to_risk = c.full_bet_risk > 0.0 ? e / c.full_bet_risk : 0.0;
  const double x2 = c.edge_to_risk * c.edge_to_risk;
  c.closed_form = x2 < 1.0 ? to_units(-0.5 * std::log1p(-x2)) : std::nan("");
  c.approximation = to_units(0.5 * std::log1p(x2));
  return c;
}

namespace {

// Growth in nats; -inf if infeasible.
double growth_nats(std::span<const double> probs, const Matrix& returns,
                   std::span<const double> q) {
  double h = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (negligible(probs[i])) continue;
    double r = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) r += q[k] * returns(i, k);
    if (r <= 0.0) return kNegInf;
    h += probs[i] * std::log(r);
  }
  return h;
}

// Best amount t in [-q_b, q_a] to move from asset a to asset b. The objective
// is concave in t, so bisection on the sign of its derivative suffices.
double best_transfer(std::span<const double> probs, const Matrix& returns,
                     const std::vector<double>& base, std::size_t a, std::size_t b, double lo,
                     double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double t = 0.5 * (lo + hi);
    double deriv = 0.0;
    bool infeasible = false;
    for (std::size_t i = 0; i < probs.size() && !infeasible; ++i) {
      if (negligible(probs[i])) continue;
      const double slope = returns(i, b) - returns(i, a);
      const double r = base[i] + t * slope;
      if (r <= 0.0) {
        // Outcome ruined at t: move away from the side that ruins it.
        deriv = slope > 0.0 ? HUGE_VAL : -HUGE_VAL;
        infeasible = true;
        break;
      }
      deriv += probs[i] * slope / r;
    }
    if (deriv > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> optimal_ratios(std::span<const double> probs, const Matrix& returns,
                                   const SimplexOptions& options) {
  detail::check_probability_vector(probs, "outcome probabilities");
  detail::require_same_size(probs.size(), returns.rows(), "optimal ratios outcomes");
  const std::size_t k = returns.cols();
  require_arg(k >= 1, "optimal ratios: no assets");
  for (double r : returns.data())
    require_arg(std::isfinite(r) && r >= 0.0, "output ratios must be finite and >= 0");

  // Start from the best single asset; the even mix if none survives alone.
  std::vector<double> q(k, 0.0);
  double best = kNegInf;
  std::size_t start = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> e(k, 0.0);
    e[c] = 1.0;
    const double g = growth_nats(probs, returns, e);
    if (g > best) {
      best = g;
      start = c;
    }
  }
  if (best == kNegInf) {
    std::fill(q.begin(), q.end(), 1.0 / static_cast<double>(k));
    best = growth_nats(probs, returns, q);
    require_arg(best > kNegInf, "every portfolio loses everything in some possible outcome");
  } else {
    q[start] = 1.0;
  }

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b || (q[a] <= 0.0 && q[b] <= 0.0)) continue;
        const auto base = outcome_ratios(returns, q);
        const double t = best_transfer(probs, returns, base, a, b, -q[b], q[a]);
        std::vector<double> trial = q;
        trial[a] -= t;
        trial[b] += t;
        if (trial[a] < 1e-15) trial[a] = 0.0;
        if (trial[b] < 1e-15) trial[b] = 0.0;
        const double g = growth_nats(probs, returns, trial);
        if (g > best + options.tol) {
          best = g;
          q = std::move(trial);
          improved = true;
        }
      }
    if (!improved) break;
  }
  double sum = 0.0;
  for (double v : q) sum += v;
  for (double& v : q) v /= sum;
  return q;
}

InformationValue information_value(std::span<const double> prior,
                                   std::span<const double> posterior_pred,
                                   std::span<const double> realized, const Matrix& returns,
                                   const SimplexOptions& options) {
  detail::require_same_size(prior.size(), posterior_pred.size(), "information value");
  detail::require_same_size(prior.size(), realized.size(), "information value");
  detail::check_probability_vector(realized, "realized distribution");
  InformationValue v;
  v.q_prior = optimal_ratios(prior, returns, options);
  v.q_posterior = optimal_ratios(posterior_pred, returns, options);
  const auto r_prior = outcome_ratios(returns, v.q_prior);
  const auto r_post = outcome_ratios(returns, v.q_posterior);
  v.pointwise.resize(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (r_prior[i] <= 0.0) {
      v.pointwise[i] = r_post[i] <= 0.0 ? 0.0 : kInfinity;
    } else {
      v.pointwise[i] = to_units(detail::safe_log(r_post[i]) - std::log(r_prior[i]));
    }
  }
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (negligible(realized[i])) continue;
    v.value += realized[i] * v.pointwise[i];
  }
  return v;
}

double arrow_value(std::span<const double> probs) {
  detail::check_probability_vector(probs, "outcome probabilities");
  return entropy(probs);
}

}  // namespace semg
