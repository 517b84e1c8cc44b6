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

#ifndef ZO_DIAGNOSTICS_HPP_
#define ZO_DIAGNOSTICS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zo/common.hpp"
#include "zo/estimators.hpp"
#include "zo/geometry.hpp"
#include "zo/optimizer.hpp"
#include "zo/stats.hpp"

namespace zo {

enum class EstimatorKind { kSymmetric, kAnchored };
enum class WPolicy { kOrigin, kRandomBall };

// Per-dimension second-moment estimates with a log-log power-law fit.
struct MomentReport {
  std::vector<int> dims;
  std::vector<double> estimates;
  std::vector<double> std_errors;
  double fitted_log_slope;
  double fitted_slope_se;
  double fitted_constant;  // exp(intercept) of the log-log fit
};

// Builds the scalar objective for a given dimension (the scan sweeps d).
using ObjectiveFactory = std::function<std::function<double(const Vec&)>(int d)>;

// Monte-Carlo scan of E[ ||g||_*^2 ] for one estimator across dimensions;
// the dual norm defaults to L2. Cells parallelize across dims with seeds
// derived from (seed, dim index), so results are reproducible bit-for-bit.
MomentReport second_moment_scan(EstimatorKind kind, const ObjectiveFactory& objective,
                                WPolicy w_policy, const std::vector<int>& dims,
                                std::int64_t n_samples, std::uint64_t seed,
                                NormId dual_of = NormId::kL2, double delta = 1e-3);

// (E ||u||_inf^4)^{1/4} for uniform sphere directions with a delta-method
// standard error. Requires d > 1 (the d = 1 value is trivially 1).
MonteCarloValue infinity_norm_moment(int d, std::int64_t n_samples, std::uint64_t seed);

struct ConcentrationReport {
  double sqrt_fourth_central_moment;  // sqrt(E[(g - E g)^4])
  double std_error;                   // delta-method, for the sqrt
  double bound_ratio;                 // value / (L^2 / d)
};

// Fourth-moment concentration of an L-Lipschitz scalar function of a
// uniform sphere direction.
ConcentrationReport lipschitz_concentration_check(const std::function<double(const Vec&)>& fn,
                                                  double lipschitz, int d,
                                                  std::int64_t n_samples, std::uint64_t seed);

// Post-hoc audit of the per-realization dual-averaging inequality
//   sum_t <g_t, w_t - w*>  <=  R^2/eta + eta sum_t ||g_t||_*^2
// as recomputed from the stored trajectory. Returns the maximum violation
// over the probes (negative when the bound holds with slack); empty probe
// lists return -R^2/eta. Probes must lie in the domain.
double md_inequality_audit(const RunRecord& record, const MirrorSetup& setup,
                           const std::vector<Vec>& probes);

struct ScalingCell {
  int d;
  std::int64_t T;
  double mean_avg_regret;
  double std_error;
};

struct ScalingReport {
  std::vector<ScalingCell> cells;
  // log mean regret ~ const + alpha_d log d + alpha_T log T; a NaN exponent
  // means that axis had a single grid point and was not fitted.
  double alpha_d;
  double alpha_d_se;
  double alpha_T;
  double alpha_T_se;
};

enum class SetupKind { kEuclideanBall, kEntropicSimplex };

// Full-pipeline regret scan over a (d, T) grid with seeded replications and
// default schedule parameters. At least one axis needs >= 2 grid points.
ScalingReport regret_scaling_experiment(SetupKind setup_kind, const std::string& objective_name,
                                        const std::vector<int>& dims,
                                        const std::vector<std::int64_t>& horizons,
                                        int replications, std::uint64_t seed);

// (E ||u||_*^4)^{1/4} for the dual norm of the given primal norm: exactly 1
// for L2 (no sampling); Monte-Carlo over the infinity norm for L1.
MonteCarloValue dual_norm_p_star(NormId norm_id, int d, std::int64_t n_samples,
                                 std::uint64_t seed);

}  // namespace zo

#endif  // ZO_DIAGNOSTICS_HPP_
