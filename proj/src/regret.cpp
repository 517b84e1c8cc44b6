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

#include "zo/regret.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace zo {

namespace {

// Euclidean projection onto {w : w_i >= floor, sum w = target}.
Vec project_shifted_simplex(const Vec& v, double floor, double target) {
  const int d = static_cast<int>(v.size());
  const double mass = target - floor * static_cast<double>(d);
  Vec shifted = v.array() - floor;
  std::vector<double> sorted(shifted.data(), shifted.data() + d);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (int j = 0; j < d; ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - mass) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) tau = candidate;
  }
  Vec w(d);
  for (int i = 0; i < d; ++i) w[i] = std::max(shifted[i] - tau, 0.0) + floor;
  return w;
}

Vec euclidean_project(const Domain& domain, const Vec& v) {
  switch (domain.kind()) {
    case Domain::Kind::kL2Ball: {
      const double norm = v.norm();
      return norm <= domain.radius() ? v : Vec(v * (domain.radius() / norm));
    }
    case Domain::Kind::kSimplex:
      return project_shifted_simplex(v, 0.0, 1.0);
    case Domain::Kind::kShrunkSimplex:
      return project_shifted_simplex(v, domain.coordinate_floor(), 1.0);
  }
  throw std::logic_error("euclidean_project: unknown kind");
}

double domain_diameter(const Domain& domain) {
  switch (domain.kind()) {
    case Domain::Kind::kL2Ball:
      return 2.0 * domain.radius();
    case Domain::Kind::kSimplex:
    case Domain::Kind::kShrunkSimplex:
      return std::sqrt(2.0);
  }
  throw std::logic_error("domain_diameter: unknown kind");
}

// Minimum-norm point in the convex hull of the columns of G: warm-started
// projected gradient on the simplex of hull weights.
Vec min_norm_in_hull(const Eigen::MatrixXd& G) {
  const int m = static_cast<int>(G.cols());
  int best = 0;
  for (int j = 1; j < m; ++j) {
    if (G.col(j).squaredNorm() < G.col(best).squaredNorm()) best = j;
  }
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(m);
  lambda[best] = 1.0;
  const Eigen::MatrixXd gram = G.transpose() * G;
  const double lipschitz = std::max(2.0 * gram.norm(), 1e-12);
  for (int it = 0; it < 1000; ++it) {
    const Eigen::VectorXd grad = 2.0 * gram * lambda;
    lambda = project_shifted_simplex(lambda - grad / lipschitz, 0.0, 1.0);
  }
  return G * lambda;
}

}  // namespace

RegretReport regret(const RunRecord& record, LossStream& stream,
                    const std::optional<Vec>& comparator, std::int64_t fvalue_samples) {
  if (record.iterates.empty()) throw std::invalid_argument("regret: empty record");
  const std::int64_t T = static_cast<std::int64_t>(record.iterates.size());
  if (stream.dim() != record.iterates.front().size()) {
    throw std::invalid_argument("regret: dimension mismatch");
  }
  if (record.losses.size() != record.iterates.size()) {
    throw std::invalid_argument("regret: record lacks realized-loss bookkeeping");
  }

  Vec w_star;
  if (comparator) {
    w_star = *comparator;
  } else if (stream.comparator_hint()) {
    w_star = *stream.comparator_hint();
  } else {
    w_star = solve_offline_comparator(stream, T);
  }
  if (w_star.size() != stream.dim()) {
    throw std::invalid_argument("regret: comparator dimension mismatch");
  }

  LossStream replay = stream.replay_copy();
  double star_sum = 0.0;
  for (std::int64_t t = 0; t < T; ++t) {
    star_sum += replay.oracle_for_round(t).eval_diagnostic(w_star);
  }
  const double mean_loss =
      std::accumulate(record.losses.begin(), record.losses.end(), 0.0) / static_cast<double>(T);
  const double mean_star = star_sum / static_cast<double>(T);

  RegretReport report;
  report.average_regret = mean_loss - mean_star;
  report.comparator = w_star;
  report.per_round_losses = record.losses;

  if (stream.kind() == StreamKind::kStochasticIid && stream.min_population_value()) {
    const MonteCarloValue f_bar = stream.population_value(
        record.average_iterate, fvalue_samples, mix_seed(record.seed, 0xBA7C4Full));
    report.optimization_error = f_bar.estimate - *stream.min_population_value();
    report.optimization_error_se = f_bar.std_error;
  }
  return report;
}

BatchConversionCheck online_to_batch_check(const RunRecord& record, LossStream& stream,
                                           std::int64_t fvalue_samples) {
  if (stream.kind() != StreamKind::kStochasticIid) {
    throw std::invalid_argument("online_to_batch_check: stream is not stochastic");
  }
  if (!stream.min_population_value() || !stream.comparator_hint()) {
    throw std::invalid_argument("online_to_batch_check: population minimum unknown");
  }
  const RegretReport rep = regret(record, stream, stream.comparator_hint(), fvalue_samples);
  const MonteCarloValue f_bar = stream.population_value(
      record.average_iterate, fvalue_samples, mix_seed(record.seed, 0xBA7C4Full));
  return BatchConversionCheck{
      MonteCarloValue{f_bar.estimate - *stream.min_population_value(), f_bar.std_error},
      rep.average_regret};
}

Vec solve_offline_comparator(LossStream& stream, std::int64_t T, std::int64_t iterations,
                             double residual_tol, double* residual_out) {
  if (T < 1) throw std::invalid_argument("solve_offline_comparator: T must be >= 1");
  const int d = stream.dim();
  const Domain& domain = stream.domain();

  // Snapshot the round functions once; the solver then owns its data.
  std::vector<std::function<double(const Vec&)>> evals;
  std::vector<std::function<Vec(const Vec&)>> subgrads;
  evals.reserve(static_cast<std::size_t>(T));
  subgrads.reserve(static_cast<std::size_t>(T));
  for (std::int64_t t = 0; t < T; ++t) {
    evals.push_back(stream.eval_fn(t));
    subgrads.push_back(stream.subgradient_fn(t));
  }
  const auto objective = [&](const Vec& w) {
    double s = 0.0;
    for (const auto& f : evals) s += f(w);
    return s / static_cast<double>(T);
  };
  const auto batch_subgrad = [&](const Vec& w) {
    Vec g = Vec::Zero(d);
    for (const auto& sg : subgrads) g += sg(w);
    return Vec(g / static_cast<double>(T));
  };

  // Projected subgradient with a dynamic Polyak target level
  // (halve the gap estimate whenever the travelled path exceeds the
  // domain diameter without reaching the level).
  Vec w = domain.center();
  double f_best = objective(w);
  Vec w_best = w;
  double gap = std::max(0.5 * std::abs(f_best), 1e-3);
  double path = 0.0;
  const double diameter = domain_diameter(domain);

  for (std::int64_t k = 0; k < iterations; ++k) {
    const Vec g = batch_subgrad(w);
    const double gnorm2 = g.squaredNorm();
    if (gnorm2 <= 1e-30) {
      f_best = objective(w);
      w_best = w;
      break;
    }
    const double f_w = objective(w);
    if (f_w < f_best) {
      f_best = f_w;
      w_best = w;
    }
    const double level = f_best - gap;
    const double step = std::max(f_w - level, 0.0) / gnorm2;
    w = euclidean_project(domain, w - step * g);
    path += step * std::sqrt(gnorm2);
    if (path > diameter) {
      gap *= 0.5;
      path = 0.0;
      if (gap < 1e-15 * std::max(1.0, std::abs(f_best))) break;
    }
  }

  // First-order certificate. Subgradients alone are useless at kinks, so
  // take the minimum-norm element of the convex hull of batch subgradients
  // sampled at +-r pairs around the solution (opposite probes cancel across
  // any kink hyperplane through it). Scanning a ladder of radii keeps the
  // certificate meaningful whether the active scale is a kink or a smooth
  // gradient; the reported residual is the best projected-step length.
  const int pairs = std::min(2 * d + 4, 40);
  Rng probe_rng = make_rng(0x0FF1CEull);
  std::vector<Vec> dirs;
  for (int j = 0; j < pairs; ++j) dirs.push_back(sample_unit_sphere(d, probe_rng).coords());

  double residual = std::numeric_limits<double>::infinity();
  for (const double r : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    Eigen::MatrixXd G(d, 3 * pairs + 1);
    G.col(0) = batch_subgrad(w_best);
    for (int j = 0; j < pairs; ++j) {
      const Vec g_plus = batch_subgrad(euclidean_project(domain, w_best + r * dirs[j]));
      const Vec g_minus = batch_subgrad(euclidean_project(domain, w_best - r * dirs[j]));
      G.col(3 * j + 1) = g_plus;
      G.col(3 * j + 2) = g_minus;
      G.col(3 * j + 3) = 0.5 * (g_plus + g_minus);
    }
    const Vec g_min = min_norm_in_hull(G);
    residual = std::min(residual, (w_best - euclidean_project(domain, w_best - g_min)).norm());
    if (residual <= residual_tol) break;
  }

  if (residual_out != nullptr) *residual_out = residual;
  if (residual > residual_tol) {
    throw std::runtime_error(
        "solve_offline_comparator: optimality residual " + std::to_string(residual) +
        " exceeds tolerance");
  }
  return w_best;
}

}  // namespace zo
