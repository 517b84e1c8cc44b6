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

#include "zo/checks.hpp"

#include <cmath>
#include <sstream>

#include "zo/diagnostics.hpp"
#include "zo/io.hpp"
#include "zo/regret.hpp"

namespace zo {

namespace {

ObjectiveFactory l2norm_factory() {
  return [](int) {
    return [](const Vec& w) { return w.norm(); };
  };
}

CheckResult check_anchored_d2(std::uint64_t seed, std::int64_t samples) {
  const std::vector<int> dims = {2, 10, 100};
  const MomentReport report =
      second_moment_scan(EstimatorKind::kAnchored, l2norm_factory(), WPolicy::kOrigin, dims,
                         samples > 0 ? samples : 2000, seed);
  double max_dev = 0.0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const double expected = static_cast<double>(dims[i]) * static_cast<double>(dims[i]);
    max_dev = std::max(max_dev, std::abs(report.estimates[i] - expected));
    detail << "d=" << dims[i] << " E=" << format_double(report.estimates[i]) << " ";
  }
  detail << "max |E - d^2| = " << format_double(max_dev) << " (tol 1e-9)";
  return CheckResult{"anchored_d2", max_dev <= 1e-9, detail.str()};
}

CheckResult check_symmetric_moment(std::uint64_t seed, std::int64_t samples) {
  const std::vector<int> dims = {2, 4, 8, 16, 32, 64, 128, 256, 512};
  const MomentReport report =
      second_moment_scan(EstimatorKind::kSymmetric, l2norm_factory(), WPolicy::kRandomBall, dims,
                         samples > 0 ? samples : 100000, seed);
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    max_ratio = std::max(max_ratio, report.estimates[i] / static_cast<double>(dims[i]));
  }
  const bool slope_ok = report.fitted_log_slope >= 0.8 && report.fitted_log_slope <= 1.2;
  const bool ratio_ok = max_ratio <= 3.0;
  std::ostringstream detail;
  detail << "log-log slope = " << format_double(report.fitted_log_slope)
         << " (want [0.8, 1.2]), max E/d = " << format_double(max_ratio) << " (cap 3)";
  return CheckResult{"symmetric_moment", slope_ok && ratio_ok, detail.str()};
}

CheckResult check_unbiasedness(std::uint64_t seed, std::int64_t samples) {
  const std::int64_t n = samples > 0 ? samples : 1000000;
  const int d = 8;
  Rng rng = make_rng(seed);

  // Linear: the estimator mean is exactly the coefficient vector.
  Vec a(d);
  for (int i = 0; i < d; ++i) a[i] = std::cos(static_cast<double>(i) + 1.0);
  TwoPointOracle linear(d, [a](const Vec& w) { return a.dot(w); });
  Vec w = Vec::Zero(d);
  const MonteCarloVector lin = smoothed_gradient_mc(linear, w, 0.01, n, rng);
  double max_sigmas = 0.0;
  for (int i = 0; i < d; ++i) {
    const double se = std::max(lin.std_error[i], 1e-15);
    max_sigmas = std::max(max_sigmas, std::abs(lin.estimate[i] - a[i]) / se);
  }

  // Quadratic: smoothed gradient equals w - w0 for every delta.
  Vec w0 = Vec::Constant(d, 0.25);
  TwoPointOracle quad(d, [w0](const Vec& x) { return 0.5 * (x - w0).squaredNorm(); });
  Vec wq = Vec::Constant(d, -0.5);
  const MonteCarloVector qd = smoothed_gradient_mc(quad, wq, 0.01, n, rng);
  for (int i = 0; i < d; ++i) {
    const double se = std::max(qd.std_error[i], 1e-15);
    max_sigmas = std::max(max_sigmas, std::abs(qd.estimate[i] - (wq[i] - w0[i])) / se);
  }

  std::ostringstream detail;
  detail << "max |mean - analytic gradient| = " << format_double(max_sigmas)
         << " standard errors (cap 5)";
  return CheckResult{"unbiasedness", max_sigmas <= 5.0, detail.str()};
}

CheckResult check_smoothing_gap(std::uint64_t seed, std::int64_t samples) {
  const std::int64_t n = samples > 0 ? samples : 20000;
  const int d = 6;
  const double delta = 0.05;
  Rng rng = make_rng(seed);
  TwoPointOracle oracle(d, [](const Vec& w) { return w.norm(); });

  double worst_excess = -1e300;
  for (int k = 0; k < 50; ++k) {
    const Vec w = Domain::l2_ball(d, 1.0).sample_point(rng);
    const MonteCarloValue smooth = smoothed_value(oracle, w, delta, n, rng);
    const double gap = std::abs(smooth.estimate - w.norm());
    worst_excess = std::max(worst_excess, gap - delta - 4.0 * smooth.std_error);
  }
  // At the kink the gap attains delta exactly.
  const MonteCarloValue at_zero = smoothed_value(oracle, Vec::Zero(d), delta, n, rng);
  const double kink_dev = std::abs(at_zero.estimate - delta);

  std::ostringstream detail;
  detail << "max(gap - delta G2 - 4 se) = " << format_double(worst_excess)
         << " (want <= 0), kink gap dev = " << format_double(kink_dev) << " (want ~0)";
  return CheckResult{"smoothing_gap", worst_excess <= 0.0 && kink_dev <= 4.0 * at_zero.std_error,
                     detail.str()};
}

CheckResult check_md_inequality(std::uint64_t seed, std::int64_t samples) {
  const std::int64_t T = samples > 0 ? std::min<std::int64_t>(samples, 2000) : 500;
  double worst = -1e300;
  for (int rep = 0; rep < 4; ++rep) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(rep));
    const bool euclidean = rep % 2 == 0;
    const int d = euclidean ? 6 : 8;
    MirrorSetup setup =
        euclidean ? MirrorSetup::euclidean_ball(d, 1.0) : MirrorSetup::entropic_simplex(d);
    ObjectiveParams params;
    params.domain = setup.domain;
    params.seed = mix_seed(s, 2);
    LossStream stream =
        LossStream::builtin(euclidean ? "abs_regression" : "shifted_l1norm", d, params);
    const ScheduleParams sched = default_parameters(setup, stream.g2(), d, T);
    const RunRecord record = run_bandit(stream, setup, sched, mix_seed(s, 1));
    Rng rng = make_rng(mix_seed(s, 3));
    std::vector<Vec> probes;
    for (int i = 0; i < 100; ++i) probes.push_back(setup.domain.sample_point(rng));
    worst = std::max(worst, md_inequality_audit(record, setup, probes));
  }
  std::ostringstream detail;
  detail << "max violation = " << format_double(worst) << " (cap 1e-6)";
  return CheckResult{"md_inequality", worst <= 1e-6, detail.str()};
}

CheckResult check_inf_norm(std::uint64_t seed, std::int64_t samples) {
  const std::int64_t n2 = samples > 0 ? std::max<std::int64_t>(samples, 10000) : 1000000;
  const MonteCarloValue at2 = infinity_norm_moment(2, n2, seed);
  const double expected = std::pow(3.0 / 8.0 + 1.0 / M_PI, 0.25);
  const double sigmas = std::abs(at2.estimate - expected) / std::max(at2.std_error, 1e-15);

  double max_ratio = 0.0;
  for (int d = 2; d <= 4096; d *= 4) {
    const std::int64_t n = samples > 0 ? std::max<std::int64_t>(samples, 10000) : 40000;
    const MonteCarloValue mv = infinity_norm_moment(d, n, mix_seed(seed, d));
    max_ratio = std::max(max_ratio,
                         mv.estimate / std::sqrt(std::log(static_cast<double>(d)) / d));
  }
  const double cap = std::pow(150.0, 0.25);
  std::ostringstream detail;
  detail << "d=2 estimate " << format_double(at2.estimate) << " vs " << format_double(expected)
         << " (" << format_double(sigmas) << " sigma), max ratio to sqrt(log d / d) = "
         << format_double(max_ratio) << " (cap " << format_double(cap) << ")";
  return CheckResult{"inf_norm", sigmas <= 3.0 && max_ratio <= cap, detail.str()};
}

CheckResult check_concentration(std::uint64_t seed, std::int64_t samples) {
  const std::int64_t n = samples > 0 ? samples : 400000;
  Vec a = Vec::Zero(4);
  a[0] = 1.0;
  const ConcentrationReport lin = lipschitz_concentration_check(
      [a](const Vec& u) { return a.dot(u); }, 1.0, 4, n, seed);
  const double expected = std::sqrt(3.0 / (4.0 * 6.0));
  const double sigmas = std::abs(lin.sqrt_fourth_central_moment - expected) /
                        std::max(lin.std_error, 1e-15);

  double max_ratio = 0.0;
  for (int d = 4; d <= 256; d *= 4) {
    Vec e1 = Vec::Zero(d);
    e1[0] = 1.0;
    const ConcentrationReport rep = lipschitz_concentration_check(
        [e1](const Vec& u) { return (u - e1).norm(); }, 1.0, d,
        samples > 0 ? samples : 100000, mix_seed(seed, d));
    max_ratio = std::max(max_ratio, rep.bound_ratio);
  }
  std::ostringstream detail;
  detail << "linear d=4: " << format_double(lin.sqrt_fourth_central_moment) << " vs "
         << format_double(expected) << " (" << format_double(sigmas)
         << " sigma), max ratio to L^2/d = " << format_double(max_ratio) << " (cap 8)";
  return CheckResult{"concentration", sigmas <= 3.0 && max_ratio <= 8.0, detail.str()};
}

}  // namespace

std::vector<std::string> known_check_suites() {
  return {"anchored_d2",  "symmetric_moment", "unbiasedness", "smoothing_gap",
          "md_inequality", "inf_norm",        "concentration"};
}

CheckResult run_check_suite(const std::string& suite, std::uint64_t seed, std::int64_t samples) {
  if (suite == "anchored_d2") return check_anchored_d2(seed, samples);
  if (suite == "symmetric_moment") return check_symmetric_moment(seed, samples);
  if (suite == "unbiasedness") return check_unbiasedness(seed, samples);
  if (suite == "smoothing_gap") return check_smoothing_gap(seed, samples);
  if (suite == "md_inequality") return check_md_inequality(seed, samples);
  if (suite == "inf_norm") return check_inf_norm(seed, samples);
  if (suite == "concentration") return check_concentration(seed, samples);
  throw std::invalid_argument("unknown check suite '" + suite + "'");
}

}  // namespace zo
