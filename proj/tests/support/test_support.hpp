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

// Shared helpers for the test binaries: seeded generators for property tests
// and straightforward reference implementations used as oracles. The oracles
// are written as plain loops in long double and share no code with the
// library.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <span>
#include <random>
#include <vector>

#include "semg/config.hpp"
#include "semg/matrix.hpp"
#include "semg/prob_core.hpp"

namespace semg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return uniform() < p; }

  // Strictly positive probability vector, occasionally with one tiny entry.
  std::vector<double> probs(std::size_t n) {
    std::vector<double> w(n);
    double total = 0;
    for (auto& x : w) {
      x = -std::log(uniform(1e-12, 1.0));
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

  // Row-stochastic n x m matrix; with probability sparse_p an entry is zeroed
  // (every row keeps at least one positive entry).
  Matrix stochastic(std::size_t n, std::size_t m, double sparse_p = 0.0) {
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = probs(m);
      const std::size_t keep = index(0, m - 1);
      double total = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != keep && coin(sparse_p)) row[j] = 0;
        total += row[j];
      }
      for (std::size_t j = 0; j < m; ++j) out(i, j) = row[j] / total;
    }
    return out;
  }

  // Truth matrix with entries in (0, 1]; each column peaks at exactly 1.
  Matrix truth(std::size_t n, std::size_t m) {
    Matrix out(n, m);
    for (std::size_t j = 0; j < m; ++j) {
      double top = 0;
      for (std::size_t i = 0; i < n; ++i) {
        out(i, j) = uniform(0.01, 1.0);
        top = std::max(top, out(i, j));
      }
      for (std::size_t i = 0; i < n; ++i) out(i, j) /= top;
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

inline double in_units(long double nats) { return static_cast<double>(nats) / log_unit(); }

inline double oracle_entropy(const std::vector<double>& p) {
  long double h = 0;
  for (double x : p)
    if (x > 0) h -= x * std::log(static_cast<long double>(x));
  return in_units(h);
}

inline std::vector<double> oracle_output(const std::vector<double>& px, const Matrix& ch) {
  std::vector<double> py(ch.cols(), 0.0);
  for (std::size_t i = 0; i < ch.rows(); ++i)
    for (std::size_t j = 0; j < ch.cols(); ++j) py[j] += px[i] * ch(i, j);
  return py;
}

inline double oracle_mi(const std::vector<double>& px, const Matrix& ch) {
  const auto py = oracle_output(px, ch);
  long double s = 0;
  for (std::size_t i = 0; i < ch.rows(); ++i)
    for (std::size_t j = 0; j < ch.cols(); ++j) {
      const long double pxy = static_cast<long double>(px[i]) * ch(i, j);
      if (pxy > 0) s += pxy * std::log(static_cast<long double>(ch(i, j)) / py[j]);
    }
  return in_units(s);
}

inline std::vector<double> oracle_logical(const std::vector<double>& px, const Matrix& t) {
  std::vector<double> out(t.cols(), 0.0);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    long double s = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) s += static_cast<long double>(px[i]) * t(i, j);
    out[j] = static_cast<double>(s);
  }
  return out;
}

// sum_ij P(x_i) P(y_j|x_i) log(T_ij / T_j).
inline double oracle_semantic_mi(const std::vector<double>& px, const Matrix& ch, const Matrix& t) {
  const auto tj = oracle_logical(px, t);
  long double s = 0;
  for (std::size_t i = 0; i < ch.rows(); ++i)
    for (std::size_t j = 0; j < ch.cols(); ++j) {
      const long double w = static_cast<long double>(px[i]) * ch(i, j);
      if (w > 0) s += w * std::log(static_cast<long double>(t(i, j)) / tj[j]);
    }
  return in_units(s);
}

inline double oracle_kl(const std::vector<double>& p, const std::vector<double>& q) {
  long double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) continue;
    if (q[i] <= 0) return HUGE_VAL;
    s += p[i] * std::log(static_cast<long double>(p[i]) / q[i]);
  }
  return in_units(s);
}

inline double binary_entropy_bits(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
}

// Restores the process-wide log base at scope exit.
class LogBaseGuard {
 public:
  explicit LogBaseGuard(LogBase base) : saved_(log_base()) { set_log_base(base); }
  ~LogBaseGuard() { set_log_base(saved_); }
  LogBaseGuard(const LogBaseGuard&) = delete;
  LogBaseGuard& operator=(const LogBaseGuard&) = delete;

 private:
  LogBase saved_;
};

inline std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace semg::testing
