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

#ifndef ZO_STATS_HPP_
#define ZO_STATS_HPP_

#include <cstdint>
#include <vector>

#include "zo/common.hpp"
#include "zo/estimators.hpp"

namespace zo {

// Streaming mean/variance (Welford).
class OnlineMoments {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double std_error() const;

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

MonteCarloValue mean_and_std_error(const std::vector<double>& xs);

struct LinearFit {
  double slope;
  double intercept;
  double slope_se;
  double intercept_se;
};

// Ordinary least squares y ~ intercept + slope * x. Requires >= 2 distinct x.
LinearFit ols_line(const std::vector<double>& x, const std::vector<double>& y);

struct PlaneFit {
  double beta_x;
  double beta_y;
  double intercept;
  double beta_x_se;
  double beta_y_se;
};

// OLS z ~ intercept + beta_x * x + beta_y * y. Requires >= 2 distinct values
// on each regressor and more points than parameters.
PlaneFit ols_plane(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& z);

}  // namespace zo

#endif  // ZO_STATS_HPP_
