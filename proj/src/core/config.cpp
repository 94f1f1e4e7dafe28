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

#include <atomic>
#include <numbers>

#include "semg/config.hpp"
#include "semg/errors.hpp"

namespace semg {

namespace {
std::atomic<LogBase> g_log_base{LogBase::bits};
}

void set_log_base(LogBase base) noexcept { g_log_base.store(base, std::memory_order_relaxed); }

LogBase log_base() noexcept { return g_log_base.load(std::memory_order_relaxed); }

const char* log_base_name(LogBase base) noexcept { return base == LogBase::bits ? "2" : "e"; }

double log_unit() noexcept { return log_base() == LogBase::bits ? std::numbers::ln2 : 1.0; }

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::all_zero_overlap: return "AllZeroOverlap";
    case ErrorCode::domain_mismatch: return "DomainMismatch";
    case ErrorCode::non_positive_sigma: return "NonPositiveSigma";
    case ErrorCode::non_positive_logical_prob: return "NonPositiveLogicalProb";
    case ErrorCode::empty_label: return "EmptyLabel";
    case ErrorCode::no_positive_truth: return "NoPositiveTruth";
    case ErrorCode::degenerate_row: return "DegenerateRow";
    case ErrorCode::zero_mixture_density: return "ZeroMixtureDensity";
    case ErrorCode::empty_component: return "EmptyComponent";
    case ErrorCode::undefined_conditional: return "UndefinedConditional";
    case ErrorCode::unknown_figure: return "UnknownFigure";
  }
  return "Unknown";
}

}  // namespace semg
