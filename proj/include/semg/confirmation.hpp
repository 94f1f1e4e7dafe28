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

#include <vector>

#include "semg/prob_core.hpp"

namespace semg {

// a = (x1, y1), b = (x1, y0), c = (x0, y1), d = (x0, y0); x1 is the case
// where the rule's antecedent holds, y1 the positive outcome.
struct ContingencyTable {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  void validate() const;
  double p_y1_given_x1() const;  // a / (a + b)
  double p_y1_given_x0() const;  // c / (c + d)
  // P(y1|x1) / P(y1|x0); +infinity when P(y1|x0) = 0.
  double positive_likelihood_ratio() const;
};

// (P(y1|x1) - P(y1|x0)) / max(P(y1|x1), P(y1|x0)).
double channel_confirmation(const ContingencyTable& t);
// (a - c) / max(a, c).
double prediction_confirmation(const ContingencyTable& t);
// max(0, (R+ - 1) / R+).
double causal_probability(const ContingencyTable& t);
// Same arithmetic as channel_confirmation; the caller supplies interventional
// counts for a causal reading.
double causal_confirmation(const ContingencyTable& t);

// Crisp rule truth function mixed with a tautology by a credibility b.
struct BeliefTruthFunction {
  std::vector<double> crisp;  // entries in {0, 1}
  double credibility = 0.0;   // in [-1, 1]

  double disbelief() const;   // 1 - |b|
  // b >= 0: b T + (1 - b). b < 0: the negated rule, |b| (1 - T) + (1 - |b|).
  std::vector<double> composed() const;
};

// Semantic Bayes prediction over {x0, x1} with the composed truth function of
// the rule "x1" at the given degree.
std::vector<double> predict_with_confirmation(double degree, const Source& base);

}  // namespace semg
