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

#include "zo/estimators.hpp"

#include <cmath>

namespace zo {

double TwoPointOracle::checked_eval(const Vec& w) const {
  if (w.size() != d_) throw std::invalid_argument("TwoPointOracle: point dimension mismatch");
  const double v = eval_(w);
  if (!std::isfinite(v)) throw OracleFailure("oracle returned a non-finite value", w);
  return v;
}

double TwoPointOracle::eval(const Vec& w) {
  ++queries_;
  return checked_eval(w);
}

double TwoPointOracle::eval_diagnostic(const Vec& w) {
  ++diagnostic_;
  return checked_eval(w);
}

namespace {

void check_estimator_args(const TwoPointOracle& oracle, const Vec& w, double delta,
                          const Direction& u) {
  if (!(delta > 0.0)) throw std::invalid_argument("gradient estimator: delta must be > 0");
  if (w.size() != u.dim() || w.size() != oracle.dim()) {
    throw std::invalid_argument("gradient estimator: dimension mismatch");
  }
}

}  // namespace

GradientEstimate two_point_gradient(TwoPointOracle& oracle, const Vec& w, double delta,
                                    const Direction& u) {
  check_estimator_args(oracle, w, delta, u);
  const double d = static_cast<double>(w.size());
  const double f_plus = oracle.eval(w + delta * u.coords());
  const double f_minus = oracle.eval(w - delta * u.coords());
  const double scale = d / (2.0 * delta) * (f_plus - f_minus);
  return GradientEstimate{scale * u.coords(), u, delta, f_plus, f_minus, 2};
}

GradientEstimate anchored_gradient(TwoPointOracle& oracle, const Vec& w, double delta,
                                   const Direction& u) {
  check_estimator_args(oracle, w, delta, u);
  const double d = static_cast<double>(w.size());
  const double f_plus = oracle.eval(w + delta * u.coords());
  const double f_anchor = oracle.eval(w);
  const double scale = d / delta * (f_plus - f_anchor);
  return GradientEstimate{scale * u.coords(), u, delta, f_plus, f_anchor, 2};
}

MonteCarloValue smoothed_value(TwoPointOracle& oracle, const Vec& w, double delta,
                               std::int64_t n_samples, Rng& rng) {
  if (!(delta > 0.0)) throw std::invalid_argument("smoothed_value: delta must be > 0");
  if (n_samples < 2) throw std::invalid_argument("smoothed_value: n_samples must be >= 2");
  const int d = static_cast<int>(w.size());
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Direction u = sample_unit_sphere(d, rng);
    const double v = oracle.eval(w + delta * u.coords());
    const double delta_mean = v - mean;
    mean += delta_mean / static_cast<double>(i + 1);
    m2 += delta_mean * (v - mean);
  }
  const double n = static_cast<double>(n_samples);
  const double variance = m2 / (n - 1.0);
  return MonteCarloValue{mean, std::sqrt(variance / n)};
}

MonteCarloVector smoothed_gradient_mc(TwoPointOracle& oracle, const Vec& w, double delta,
                                      std::int64_t n_samples, Rng& rng) {
  if (!(delta > 0.0)) throw std::invalid_argument("smoothed_gradient_mc: delta must be > 0");
  if (n_samples < 2) throw std::invalid_argument("smoothed_gradient_mc: n_samples must be >= 2");
  const int d = static_cast<int>(w.size());
  Vec mean = Vec::Zero(d);
  Vec m2 = Vec::Zero(d);
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Direction u = sample_unit_sphere(d, rng);
    const GradientEstimate est = two_point_gradient(oracle, w, delta, u);
    for (int j = 0; j < d; ++j) {
      const double delta_mean = est.g[j] - mean[j];
      mean[j] += delta_mean / static_cast<double>(i + 1);
      m2[j] += delta_mean * (est.g[j] - mean[j]);
    }
  }
  const double n = static_cast<double>(n_samples);
  Vec se(d);
  for (int j = 0; j < d; ++j) se[j] = std::sqrt(m2[j] / (n - 1.0) / n);
  return MonteCarloVector{std::move(mean), std::move(se), n_samples};
}

}  // namespace zo
