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

#include "zo/optimizer.hpp"

#include <cmath>

namespace zo {

ScheduleParams default_parameters(const MirrorSetup& setup, double g2, int d, std::int64_t T) {
  if (!(g2 > 0.0)) throw std::invalid_argument("default_parameters: G2 must be > 0");
  if (d < 1) throw std::invalid_argument("default_parameters: d must be >= 1");
  if (T < 1) throw std::invalid_argument("default_parameters: T must be >= 1");
  if (!(setup.R > 0.0) || !(setup.p_star > 0.0)) {
    throw std::invalid_argument("default_parameters: setup requires positive R and p_star");
  }
  ScheduleParams p;
  p.T = T;
  p.d = d;
  const double dT = static_cast<double>(d) * static_cast<double>(T);
  p.eta = setup.R / (setup.p_star * g2 * std::sqrt(dT));
  p.delta_cap = 1e-3 * setup.R;
  const double bound = setup.p_star * setup.R *
                       std::sqrt(static_cast<double>(d) / static_cast<double>(T));
  p.delta0 = std::min(bound, p.delta_cap);
  return p;
}

RunRecord run_bandit(LossStream& losses, const MirrorSetup& setup, const ScheduleParams& params,
                     std::uint64_t seed, LossBookkeeping bookkeeping) {
  const int d = setup.domain.dim();
  if (losses.dim() != d || params.d != d) {
    throw std::invalid_argument("run_bandit: dimension mismatch");
  }
  if (params.T < 1) throw std::invalid_argument("run_bandit: T must be >= 1");
  if (!(params.eta > 0.0)) throw std::invalid_argument("run_bandit: eta must be > 0");
  if (!params.delta_seq.empty() &&
      params.delta_seq.size() != static_cast<std::size_t>(params.T)) {
    throw std::invalid_argument("run_bandit: delta sequence length must equal T");
  }

  RunRecord rec;
  rec.seed = seed;
  rec.params = params;
  rec.iterates.reserve(static_cast<std::size_t>(params.T));
  rec.dual_states.reserve(static_cast<std::size_t>(params.T));
  rec.estimates.reserve(static_cast<std::size_t>(params.T));
  if (bookkeeping == LossBookkeeping::kDiagnostic) {
    rec.losses.reserve(static_cast<std::size_t>(params.T));
  }

  Rng rng = make_rng(seed);
  Vec theta = Vec::Zero(d);
  Vec iterate_sum = Vec::Zero(d);

  for (std::int64_t t = 0; t < params.T; ++t) {
    const Vec w = mirror_step(setup, theta);
    const Direction u = sample_unit_sphere(d, rng);
    TwoPointOracle& oracle = losses.oracle_for_round(t);
    try {
      GradientEstimate est = two_point_gradient(oracle, w, params.delta(t), u);
      if (bookkeeping == LossBookkeeping::kDiagnostic) {
        rec.losses.push_back(oracle.eval_diagnostic(w));
      }
      rec.iterates.push_back(w);
      rec.dual_states.push_back(theta);
      iterate_sum += w;
      theta -= params.eta * est.g;
      rec.estimates.push_back(std::move(est));
    } catch (const OracleFailure& e) {
      const std::int64_t done = static_cast<std::int64_t>(rec.iterates.size());
      rec.total_queries = oracle.query_count();
      rec.diagnostic_queries = static_cast<std::int64_t>(rec.losses.size());
      if (done > 0) rec.average_iterate = iterate_sum / static_cast<double>(done);
      throw RunAborted("run_bandit: oracle failure at round " + std::to_string(t) + ": " +
                           e.what(),
                       std::move(rec));
    }
  }

  rec.average_iterate = iterate_sum / static_cast<double>(params.T);
  rec.total_queries = 2 * params.T;
  rec.diagnostic_queries = static_cast<std::int64_t>(rec.losses.size());
  return rec;
}

Vec average_iterate(const RunRecord& record) {
  if (record.iterates.empty()) {
    throw std::invalid_argument("average_iterate: empty record");
  }
  Vec sum = Vec::Zero(record.iterates.front().size());
  for (const Vec& w : record.iterates) sum += w;
  return sum / static_cast<double>(record.iterates.size());
}

}  // namespace zo
