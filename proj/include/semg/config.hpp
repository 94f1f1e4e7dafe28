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

#include <cmath>

namespace semg {

enum class LogBase { bits, nats };

// Process-wide unit for every reported information quantity. Defaults to
// bits. Internally everything is computed in nats and converted on output.
void set_log_base(LogBase base) noexcept;
LogBase log_base() noexcept;
const char* log_base_name(LogBase base) noexcept;

// Natural log of the configured base (ln 2 for bits, 1 for nats).
double log_unit() noexcept;

inline double to_units(double nats) noexcept { return nats / log_unit(); }
inline double from_units(double value) noexcept { return value * log_unit(); }

// Probabilities below this are treated as exact zeros inside log terms.
inline constexpr double kZeroProbability = 1e-12;

// Tolerance for "sums to one" checks on distributions and stochastic rows.
inline constexpr double kSumTolerance = 1e-9;

inline constexpr double kInfinity = HUGE_VAL;

}  // namespace semg
