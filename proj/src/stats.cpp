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

#include "zo/stats.hpp"

#include <cmath>
#include <set>

namespace zo {

double OnlineMoments::std_error() const {
  if (n_ < 2) return 0.0;
  return std::sqrt(variance() / static_cast<double>(n_));
}

MonteCarloValue mean_and_std_error(const std::vector<double>& xs) {
  if (xs.size() < 2) {
    throw std::invalid_argument("mean_and_std_error: need at least 2 samples");
  }
  OnlineMoments m;
  for (double x : xs) m.add(x);
  return MonteCarloValue{m.mean(), m.std_error()};
}

namespace {

int count_distinct(const std::vector<double>& xs) {
  return static_cast<int>(std::set<double>(xs.begin(), xs.end()).size());
}

}  // namespace

LinearFit ols_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  if (n != static_cast<std::int64_t>(y.size()) || n < 2 || count_distinct(x) < 2) {
    throw std::invalid_argument("ols_line: need >= 2 points with distinct x");
  }
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd Y(n);
  for (std::int64_t i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = x[i];
    Y(i) = y[i];
  }
  const Eigen::Matrix2d xtx = (X.transpose() * X);
  const Eigen::Vector2d beta = xtx.ldlt().solve(X.transpose() * Y);
  const double rss = (Y - X * beta).squaredNorm();
  const double sigma2 = n > 2 ? rss / static_cast<double>(n - 2) : 0.0;
  const Eigen::Matrix2d cov = sigma2 * xtx.inverse();
  return LinearFit{beta(1), beta(0), std::sqrt(std::max(0.0, cov(1, 1))),
                   std::sqrt(std::max(0.0, cov(0, 0)))};
}

PlaneFit ols_plane(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& z) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  if (n != static_cast<std::int64_t>(y.size()) || n != static_cast<std::int64_t>(z.size())) {
    throw std::invalid_argument("ols_plane: size mismatch");
  }
  if (n < 4 || count_distinct(x) < 2 || count_distinct(y) < 2) {
    throw std::invalid_argument("ols_plane: need >= 4 points with 2 distinct values per axis");
  }
  Eigen::MatrixXd X(n, 3);
  Eigen::VectorXd Z(n);
  for (std::int64_t i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = x[i];
    X(i, 2) = y[i];
    Z(i) = z[i];
  }
  const Eigen::Matrix3d xtx = X.transpose() * X;
  const Eigen::Vector3d beta = xtx.ldlt().solve(X.transpose() * Z);
  const double rss = (Z - X * beta).squaredNorm();
  const double sigma2 = n > 3 ? rss / static_cast<double>(n - 3) : 0.0;
  const Eigen::Matrix3d cov = sigma2 * xtx.inverse();
  return PlaneFit{beta(1), beta(2), beta(0), std::sqrt(std::max(0.0, cov(1, 1))),
                  std::sqrt(std::max(0.0, cov(2, 2)))};
}

}  // namespace zo
