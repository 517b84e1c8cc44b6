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

#ifndef ZO_OPTIMIZER_HPP_
#define ZO_OPTIMIZER_HPP_

#include <cstdint>
#include <vector>

#include "zo/common.hpp"
#include "zo/estimators.hpp"
#include "zo/geometry.hpp"
#include "zo/objectives.hpp"

namespace zo {

// Step size and exploration radii for a horizon-T run.
struct ScheduleParams {
  std::int64_t T = 0;
  int d = 0;
  double eta = 0.0;
  double delta0 = 0.0;               // constant radius when delta_seq is empty
  std::vector<double> delta_seq;     // optional per-round radii (size T)
  double delta_cap = 0.0;

  double delta(std::int64_t t) const {
    return delta_seq.empty() ? delta0 : delta_seq[static_cast<std::size_t>(t)];
  }
};

// eta = R / (p_star G2 sqrt(dT)); constant delta_t = min(p_star R sqrt(d/T),
// delta_cap) with delta_cap = 1e-3 R. The radius stays well below its
// schedule bound: smaller delta tightens the smoothing bias while the cap
// keeps (f_plus - f_minus) / 2 delta away from catastrophic cancellation.
ScheduleParams default_parameters(const MirrorSetup& setup, double g2, int d, std::int64_t T);

// Full trajectory of one run. Iterates and dual states are stored for every
// round, estimates retain the raw probe values, and losses hold the
// out-of-band f_t(w_t) evaluations (diagnostic only: they are not visible
// to the learner and are counted separately from the 2T learning queries).
struct RunRecord {
  std::vector<Vec> iterates;
  std::vector<Vec> dual_states;
  std::vector<GradientEstimate> estimates;
  std::vector<double> losses;
  Vec average_iterate;
  std::uint64_t seed = 0;
  std::int64_t total_queries = 0;       // learning queries: exactly 2T
  std::int64_t diagnostic_queries = 0;
  ScheduleParams params;
};

// Raised when an oracle fails mid-run; carries the completed prefix.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(const std::string& msg, RunRecord partial_record)
      : std::runtime_error(msg), partial(std::move(partial_record)) {}
  RunRecord partial;
};

enum class LossBookkeeping { kDiagnostic, kNone };

// Dual-averaging mirror descent with the symmetric two-point estimator:
// theta_1 = 0; for t = 1..T: w_t = mirror_step(theta_t), sample u_t, query
// f_t at w_t +- delta_t u_t, form the estimate, theta_{t+1} = theta_t -
// eta g_t. Deterministic given the seed. With kNone bookkeeping the oracle
// sees only the 2T probe queries (required when queries are billed, e.g.
// external processes).
RunRecord run_bandit(LossStream& losses, const MirrorSetup& setup, const ScheduleParams& params,
                     std::uint64_t seed,
                     LossBookkeeping bookkeeping = LossBookkeeping::kDiagnostic);

// Arithmetic mean of the iterates (the online-to-batch point).
Vec average_iterate(const RunRecord& record);

}  // namespace zo

#endif  // ZO_OPTIMIZER_HPP_
