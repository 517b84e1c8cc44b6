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

#include "zo/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "zo/regret.hpp"

namespace zo {

namespace {

Vec uniform_unit_ball(int d, Rng& rng) {
  const Direction u = sample_unit_sphere(d, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = std::pow(unif(rng), 1.0 / static_cast<double>(d));
  return r * u.coords();
}

double dual_norm_value(NormId dual_of, const Vec& g) {
  return dual_of == NormId::kL2 ? g.norm() : g.lpNorm<Eigen::Infinity>();
}

}  // namespace

MomentReport second_moment_scan(EstimatorKind kind, const ObjectiveFactory& objective,
                                WPolicy w_policy, const std::vector<int>& dims,
                                std::int64_t n_samples, std::uint64_t seed, NormId dual_of,
                                double delta) {
  if (dims.empty()) throw std::invalid_argument("second_moment_scan: dims must be nonempty");
  if (n_samples < 1000) {
    throw std::invalid_argument("second_moment_scan: n_samples must be >= 1000");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("second_moment_scan: delta must be > 0");
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("second_moment_scan: dimensions must be >= 1");
  }

  MomentReport report;
  report.dims = dims;
  report.estimates.resize(dims.size());
  report.std_errors.resize(dims.size());

  parallel_for(static_cast<std::int64_t>(dims.size()), [&](std::int64_t i) {
    const int d = dims[static_cast<std::size_t>(i)];
    Rng rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    auto fn = objective(d);
    TwoPointOracle oracle(d, fn);
    OnlineMoments acc;
    for (std::int64_t s = 0; s < n_samples; ++s) {
      const Vec w = w_policy == WPolicy::kOrigin ? Vec(Vec::Zero(d)) : uniform_unit_ball(d, rng);
      const Direction u = sample_unit_sphere(d, rng);
      const GradientEstimate est = kind == EstimatorKind::kSymmetric
                                       ? two_point_gradient(oracle, w, delta, u)
                                       : anchored_gradient(oracle, w, delta, u);
      const double dual = dual_norm_value(dual_of, est.g);
      acc.add(dual * dual);
    }
    report.estimates[static_cast<std::size_t>(i)] = acc.mean();
    report.std_errors[static_cast<std::size_t>(i)] = acc.std_error();
  });

  // Power-law fit over the dims with positive estimates (the symmetric
  // estimator is identically zero at symmetric kinks, which has no slope).
  std::vector<double> log_d, log_e;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (report.estimates[i] > 0.0) {
      log_d.push_back(std::log(static_cast<double>(dims[i])));
      log_e.push_back(std::log(report.estimates[i]));
    }
  }
  if (log_d.size() >= 2) {
    const LinearFit fit = ols_line(log_d, log_e);
    report.fitted_log_slope = fit.slope;
    report.fitted_slope_se = fit.slope_se;
    report.fitted_constant = std::exp(fit.intercept);
  } else {
    report.fitted_log_slope = std::numeric_limits<double>::quiet_NaN();
    report.fitted_slope_se = std::numeric_limits<double>::quiet_NaN();
    report.fitted_constant = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

MonteCarloValue infinity_norm_moment(int d, std::int64_t n_samples, std::uint64_t seed) {
  if (d <= 1) throw std::invalid_argument("infinity_norm_moment: requires d > 1");
  if (n_samples < 10000) {
    throw std::invalid_argument("infinity_norm_moment: n_samples must be >= 10^4");
  }
  Rng rng = make_rng(seed);
  OnlineMoments acc;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Direction u = sample_unit_sphere(d, rng);
    const double m = u.coords().lpNorm<Eigen::Infinity>();
    acc.add(m * m * m * m);
  }
  const double mean4 = acc.mean();
  const double se4 = acc.std_error();
  const double root = std::pow(mean4, 0.25);
  // Delta method for x -> x^{1/4}.
  const double se = 0.25 * std::pow(mean4, -0.75) * se4;
  return MonteCarloValue{root, se};
}

ConcentrationReport lipschitz_concentration_check(const std::function<double(const Vec&)>& fn,
                                                  double lipschitz, int d,
                                                  std::int64_t n_samples, std::uint64_t seed) {
  if (!(lipschitz > 0.0)) {
    throw std::invalid_argument("lipschitz_concentration_check: L must be > 0");
  }
  if (d < 1) throw std::invalid_argument("lipschitz_concentration_check: d must be >= 1");
  if (n_samples < 2) {
    throw std::invalid_argument("lipschitz_concentration_check: n_samples must be >= 2");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_samples));
  Rng rng = make_rng(seed);
  OnlineMoments mean_acc;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Direction u = sample_unit_sphere(d, rng);
    const double v = fn(u.coords());
    values.push_back(v);
    mean_acc.add(v);
  }
  const double mean = mean_acc.mean();
  OnlineMoments fourth;
  for (double v : values) {
    const double c = v - mean;
    fourth.add(c * c * c * c);
  }
  const double m4 = fourth.mean();
  const double root = std::sqrt(m4);
  const double se = m4 > 0.0 ? fourth.std_error() / (2.0 * root) : 0.0;
  const double bound = lipschitz * lipschitz / static_cast<double>(d);
  return ConcentrationReport{root, se, root / bound};
}

double md_inequality_audit(const RunRecord& record, const MirrorSetup& setup,
                           const std::vector<Vec>& probes) {
  for (const Vec& p : probes) {
    if (!setup.domain.contains(p)) {
      throw std::invalid_argument("md_inequality_audit: probe outside the domain");
    }
  }
  const double eta = record.params.eta;
  if (!(eta > 0.0)) throw std::invalid_argument("md_inequality_audit: record has no step size");
  const double budget = setup.R * setup.R / eta;

  double probe_free = 0.0;  // sum_t <g_t, w_t>
  double dual_sum = 0.0;    // sum_t ||g_t||_*^2
  Vec g_total = Vec::Zero(setup.domain.dim());
  for (std::size_t t = 0; t < record.estimates.size(); ++t) {
    const Vec& g = record.estimates[t].g;
    probe_free += g.dot(record.iterates[t]);
    const double dual = setup.dual_norm(g);
    dual_sum += dual * dual;
    g_total += g;
  }

  double max_violation = -budget;
  for (const Vec& p : probes) {
    const double lhs = probe_free - g_total.dot(p);
    max_violation = std::max(max_violation, lhs - budget - eta * dual_sum);
  }
  return max_violation;
}

ScalingReport regret_scaling_experiment(SetupKind setup_kind, const std::string& objective_name,
                                        const std::vector<int>& dims,
                                        const std::vector<std::int64_t>& horizons,
                                        int replications, std::uint64_t seed) {
  if (dims.empty() || horizons.empty()) {
    throw std::invalid_argument("regret_scaling_experiment: empty grid");
  }
  if (dims.size() < 2 && horizons.size() < 2) {
    throw std::invalid_argument(
        "regret_scaling_experiment: need >= 2 grid points on a fitted axis");
  }
  if (replications < 2) {
    throw std::invalid_argument("regret_scaling_experiment: need >= 2 replications");
  }

  struct Cell {
    int d;
    std::int64_t T;
  };
  std::vector<Cell> cells;
  for (int d : dims) {
    for (std::int64_t T : horizons) cells.push_back(Cell{d, T});
  }

  std::vector<std::vector<double>> regrets(cells.size(),
                                           std::vector<double>(static_cast<std::size_t>(replications)));
  const std::int64_t jobs = static_cast<std::int64_t>(cells.size()) * replications;
  parallel_for(jobs, [&](std::int64_t j) {
    const std::size_t ci = static_cast<std::size_t>(j / replications);
    const int rep = static_cast<int>(j % replications);
    const Cell cell = cells[ci];
    const std::uint64_t cell_seed =
        mix_seed(mix_seed(seed, static_cast<std::uint64_t>(ci)), static_cast<std::uint64_t>(rep));

    MirrorSetup setup = setup_kind == SetupKind::kEuclideanBall
                            ? MirrorSetup::euclidean_ball(cell.d, 1.0)
                            : MirrorSetup::entropic_simplex(cell.d);
    ObjectiveParams params;
    params.domain = setup.domain;
    params.seed = mix_seed(cell_seed, 2);
    LossStream stream = LossStream::builtin(objective_name, cell.d, params);
    const ScheduleParams sched = default_parameters(setup, stream.g2(), cell.d, cell.T);
    const RunRecord record = run_bandit(stream, setup, sched, mix_seed(cell_seed, 1));
    const RegretReport rep_report = regret(record, stream);
    regrets[ci][static_cast<std::size_t>(rep)] = rep_report.average_regret;
  });

  ScalingReport report;
  std::vector<double> log_d, log_T, log_regret;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const MonteCarloValue mv = mean_and_std_error(regrets[ci]);
    report.cells.push_back(ScalingCell{cells[ci].d, cells[ci].T, mv.estimate, mv.std_error});
    if (mv.estimate > 0.0) {
      log_d.push_back(std::log(static_cast<double>(cells[ci].d)));
      log_T.push_back(std::log(static_cast<double>(cells[ci].T)));
      log_regret.push_back(std::log(mv.estimate));
    }
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  report.alpha_d = nan;
  report.alpha_d_se = nan;
  report.alpha_T = nan;
  report.alpha_T_se = nan;
  if (dims.size() >= 2 && horizons.size() >= 2) {
    const PlaneFit fit = ols_plane(log_d, log_T, log_regret);
    report.alpha_d = fit.beta_x;
    report.alpha_d_se = fit.beta_x_se;
    report.alpha_T = fit.beta_y;
    report.alpha_T_se = fit.beta_y_se;
  } else if (dims.size() >= 2) {
    const LinearFit fit = ols_line(log_d, log_regret);
    report.alpha_d = fit.slope;
    report.alpha_d_se = fit.slope_se;
  } else {
    const LinearFit fit = ols_line(log_T, log_regret);
    report.alpha_T = fit.slope;
    report.alpha_T_se = fit.slope_se;
  }
  return report;
}

MonteCarloValue dual_norm_p_star(NormId norm_id, int d, std::int64_t n_samples,
                                 std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("dual_norm_p_star: d must be >= 1");
  switch (norm_id) {
    case NormId::kL2:
      return MonteCarloValue{1.0, 0.0};  // ||u||_2 = 1 on the sphere
    case NormId::kL1:
      if (d == 1) return MonteCarloValue{1.0, 0.0};
      return infinity_norm_moment(d, n_samples, seed);
  }
  throw std::invalid_argument("dual_norm_p_star: unknown norm");
}

}  // namespace zo
