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

#ifndef ZO_ESTIMATORS_HPP_
#define ZO_ESTIMATORS_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "zo/common.hpp"
#include "zo/geometry.hpp"
#include "zo/rng.hpp"

namespace zo {

// One two-query gradient estimate. The raw probe values and the direction
// are kept so diagnostics can re-derive everything without re-querying.
struct GradientEstimate {
  Vec g;
  Direction u;
  double delta;
  double f_plus;
  double f_minus_or_anchor;
  int queries_used;  // always 2
};

// A black-box objective queryable at arbitrary points, with query counting.
//
// Learning queries go through eval() and count toward the two-per-round
// budget; eval_diagnostic() is for out-of-band bookkeeping (e.g. realized
// losses) and is counted separately. Stochastic objectives re-instantiate
// their per-round randomness through round_reset(), so both queries within
// a round see the same function. Not thread-safe: concurrent replications
// must each own a private instance.
class TwoPointOracle {
 public:
  using EvalFn = std::function<double(const Vec&)>;
  using ResetFn = std::function<void(std::int64_t)>;

  TwoPointOracle(int d, EvalFn eval) : d_(d), eval_(std::move(eval)) {
    if (d_ < 1) throw std::invalid_argument("TwoPointOracle: dimension must be >= 1");
    if (!eval_) throw std::invalid_argument("TwoPointOracle: eval function required");
  }

  double eval(const Vec& w);
  double eval_diagnostic(const Vec& w);
  void round_reset(std::int64_t round) {
    if (reset_) reset_(round);
  }
  void set_round_reset(ResetFn fn) { reset_ = std::move(fn); }

  std::int64_t query_count() const { return queries_; }
  std::int64_t diagnostic_count() const { return diagnostic_; }
  int dim() const { return d_; }

  std::optional<double> lipschitz_l2;
  std::optional<double> lipschitz_l1;

 private:
  double checked_eval(const Vec& w) const;

  int d_;
  EvalFn eval_;
  ResetFn reset_;
  std::int64_t queries_ = 0;
  std::int64_t diagnostic_ = 0;
};

// Symmetric estimator: (d / 2 delta) * (f(w + delta u) - f(w - delta u)) * u.
// Consumes exactly two oracle queries.
GradientEstimate two_point_gradient(TwoPointOracle& oracle, const Vec& w, double delta,
                                    const Direction& u);

// Anchored estimator: (d / delta) * (f(w + delta u) - f(w)) * u.
// Same query budget; second moment can reach d^2 at kinks.
GradientEstimate anchored_gradient(TwoPointOracle& oracle, const Vec& w, double delta,
                                   const Direction& u);

struct MonteCarloValue {
  double estimate;
  double std_error;
};

// Monte-Carlo estimate of the sphere-smoothed value E_u[f(w + delta u)].
MonteCarloValue smoothed_value(TwoPointOracle& oracle, const Vec& w, double delta,
                               std::int64_t n_samples, Rng& rng);

struct MonteCarloVector {
  Vec estimate;
  Vec std_error;  // per coordinate
  std::int64_t n_samples;
};

// Mean of n_samples symmetric estimates over fresh directions; unbiased for
// the gradient of the smoothed function.
MonteCarloVector smoothed_gradient_mc(TwoPointOracle& oracle, const Vec& w, double delta,
                                      std::int64_t n_samples, Rng& rng);

}  // namespace zo

#endif  // ZO_ESTIMATORS_HPP_
