// Copyright 2026 The zeroorder Authors
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

#ifndef ZO_REGRET_HPP_
#define ZO_REGRET_HPP_

#include <cstdint>
#include <optional>

#include "zo/objectives.hpp"
#include "zo/optimizer.hpp"

namespace zo {

struct RegretReport {
  double average_regret;                       // (1/T) sum f_t(w_t) - (1/T) sum f_t(w*)
  Vec comparator;
  std::vector<double> per_round_losses;
  std::optional<double> optimization_error;    // F(wbar) - min F, stochastic streams
  std::optional<double> optimization_error_se;
};

// Average regret of a completed run against a fixed comparator. Comparator
// resolution: the explicit argument, else the stream's hint, else the
// offline solve below. Comparator losses are recomputed by replaying the
// stream; w_t losses come from the record as stored. For stochastic streams
// the report also carries the Monte-Carlo optimization error of the average
// iterate (fvalue_samples fresh draws).
RegretReport regret(const RunRecord& record, LossStream& stream,
                    const std::optional<Vec>& comparator = {},
                    std::int64_t fvalue_samples = 100000);

struct BatchConversionCheck {
  MonteCarloValue optimization_error;  // F(wbar_T) - min F, with MC std error
  double average_regret;               // measured against the population minimizer
};

// Pairs the stochastic optimization error of the average iterate with the
// measured average regret; in expectation the former never exceeds the
// latter. Errors on non-stochastic streams.
BatchConversionCheck online_to_batch_check(const RunRecord& record, LossStream& stream,
                                           std::int64_t fvalue_samples = 100000);

// Best fixed point in hindsight, min_w (1/T) sum_t f_t(w), by projected
// subgradient descent with a Polyak-style step rule (desk scale: cost is
// iterations x T subgradient evaluations). Optimality is verified with a
// projected-step residual using the minimum-norm vector in the convex hull
// of subgradients collected around the solution, which stays meaningful at
// kinks; throws if the residual exceeds `residual_tol`.
Vec solve_offline_comparator(LossStream& stream, std::int64_t T, std::int64_t iterations = 100000,
                             double residual_tol = 1e-4, double* residual_out = nullptr);

}  // namespace zo

#endif  // ZO_REGRET_HPP_
