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

#include "semg/confirmation.hpp"

#include <algorithm>
#include <cmath>

#include "core/numeric.hpp"

namespace semg {

using detail::require;
using detail::require_arg;

void ContingencyTable::validate() const {
  for (double v : {a, b, c, d})
    require_arg(std::isfinite(v) && v >= 0.0, "contingency counts must be finite and >= 0");
  require_arg(a + b + c + d > 0.0, "contingency table is empty");
}

double ContingencyTable::p_y1_given_x1() const {
  validate();
  require(a + b > 0.0, ErrorCode::undefined_conditional, "P(y1|x1) undefined: a + b = 0");
  return a / (a + b);
}

double ContingencyTable::p_y1_given_x0() const {
  validate();
  require(c + d > 0.0, ErrorCode::undefined_conditional, "P(y1|x0) undefined: c + d = 0");
  return c / (c + d);
}

double ContingencyTable::positive_likelihood_ratio() const {
  const double p1 = p_y1_given_x1(), p0 = p_y1_given_x0();
  if (p0 == 0.0) return p1 == 0.0 ? 1.0 : kInfinity;
  return p1 / p0;
}

double channel_confirmation(const ContingencyTable& t) {
  const double p1 = t.p_y1_given_x1(), p0 = t.p_y1_given_x0();
  const double mx = std::max(p1, p0);
  return mx == 0.0 ? 0.0 : (p1 - p0) / mx;
}

double prediction_confirmation(const ContingencyTable& t) {
  t.validate();
  require(t.a + t.c > 0.0, ErrorCode::undefined_conditional,
          "prediction confirmation undefined: a + c = 0");
  return (t.a - t.c) / std::max(t.a, t.c);
}

double causal_probability(const ContingencyTable& t) {
  const double r = t.positive_likelihood_ratio();
  if (std::isinf(r)) return 1.0;
  return std::max(0.0, (r - 1.0) / r);
}

double causal_confirmation(const ContingencyTable& t) {
  const double r = t.positive_likelihood_ratio();
  if (std::isinf(r)) return 1.0;
  return (r - 1.0) / std::max(r, 1.0);
}

double BeliefTruthFunction::disbelief() const { return 1.0 - std::abs(credibility); }

std::vector<double> BeliefTruthFunction::composed() const {
  require_arg(std::isfinite(credibility) && credibility >= -1.0 && credibility <= 1.0,
              "credibility must lie in [-1, 1]");
  const double mag = std::abs(credibility);
  std::vector<double> out(crisp.size());
  for (std::size_t i = 0; i < crisp.size(); ++i) {
    require_arg(crisp[i] >= 0.0 && crisp[i] <= 1.0, "crisp truth values must lie in [0, 1]");
    const double truth = credibility >= 0.0 ? crisp[i] : 1.0 - crisp[i];
    out[i] = std::clamp(mag * truth + (1.0 - mag), 0.0, 1.0);
  }
  return out;
}

std::vector<double> predict_with_confirmation(double degree, const Source& base) {
  require_arg(base.size() == 2, "prediction with confirmation needs a source over {x0, x1}");
  const BeliefTruthFunction tf{{0.0, 1.0}, degree};
  return semantic_bayes(base, tf.composed()).posterior;
}

}  // namespace semg
