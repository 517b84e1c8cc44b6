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

#ifndef ZO_OBJECTIVES_HPP_
#define ZO_OBJECTIVES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "zo/common.hpp"
#include "zo/estimators.hpp"
#include "zo/geometry.hpp"

namespace zo {

enum class StreamKind { kFixed, kStochasticIid, kObliviousAdversary };

// Construction parameters for builtin objectives. Unset vectors get
// deterministic defaults derived from the seed (centers at half the domain
// scale, linear coefficient e_1).
struct ObjectiveParams {
  std::optional<Domain> domain;  // defaults to the unit L2 ball
  std::optional<Vec> w0;         // center / regression target
  std::optional<Vec> a;          // linear coefficient
  double noise_std = 0.0;        // noise scale (uniform, see per-objective notes)
  std::uint64_t seed = 0;
};

// A per-round supplier of two-point oracles.
//
// oracle_for_round(t) re-instantiates the round-t objective (drawing xi_t
// for stochastic streams) and returns the stream's reusable oracle; draws
// are a pure function of (seed, t), so streams can be replayed and rounds
// accessed in any order. replay_copy() builds an identical stream with
// fresh query counters.
//
// Builtins (name: f, declared Lipschitz constants):
//   l2norm:          f(w) = ||w - w0||_2, G2 = 1. Fixed.
//   linear:          f(w) = <a, w>, G2 = ||a||_2. Fixed.
//   shifted_l1norm:  f(w) = ||w - w0||_1, G1 = 1, G2 = sqrt(d). Fixed.
//   quadratic:       f(w; xi) = 0.5 ||w - xi||_2^2, xi = w0 + nu_t with
//                    nu_t uniform in the ball of radius noise_std.
//                    Stochastic i.i.d. (degenerate when noise_std = 0);
//                    G2 = sup_domain ||w - w0|| + noise_std.
//   abs_regression:  f(w; x, y) = |<x, w> - y|, x_t uniform on the unit
//                    sphere, y_t = <x_t, w0> + eps_t with eps_t uniform in
//                    [-noise_std, noise_std]. Stochastic i.i.d., G2 = 1.
class LossStream {
 public:
  static LossStream builtin(const std::string& name, int d, ObjectiveParams params);
  // Fixed stream around a caller-supplied black box (e.g. an external
  // process); no comparator or population structure is attached.
  static LossStream fixed_custom(int d, Domain domain, double g2,
                                 TwoPointOracle::EvalFn eval);
  // Oblivious adversary: an arbitrary deterministic round -> function map.
  static LossStream oblivious(int d, Domain domain, double g2,
                              std::function<double(std::int64_t, const Vec&)> eval,
                              std::function<Vec(std::int64_t, const Vec&)> subgradient = {},
                              std::optional<Vec> comparator_hint = {});

  TwoPointOracle& oracle_for_round(std::int64_t t);

  StreamKind kind() const { return kind_; }
  int dim() const { return d_; }
  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  double g2() const { return g2_; }
  std::optional<double> g1() const { return g1_; }
  std::optional<Vec> comparator_hint() const { return comparator_hint_; }

  // min_w E_xi f(w; xi) in closed form, when known (stochastic builtins).
  std::optional<double> min_population_value() const { return min_f_; }
  // Fresh-sample Monte-Carlo estimate of F(w) = E_xi f(w; xi). Never reuses
  // round draws: samples come from an independent seed stream.
  MonteCarloValue population_value(const Vec& w, std::int64_t n_samples,
                                   std::uint64_t seed) const;

  // Analytic subgradient of the round-t function (sign(0) = 0 convention).
  Vec subgradient_at(std::int64_t t, const Vec& w);
  // Snapshots of the round-t function, detached from the stream's mutable
  // round state (used by the offline comparator solver).
  std::function<double(const Vec&)> eval_fn(std::int64_t t);
  std::function<Vec(const Vec&)> subgradient_fn(std::int64_t t);

  LossStream replay_copy() const;

  // Movable (the internal oracle is rebound to the new object; query
  // counters reset). Not copyable; use replay_copy().
  LossStream(LossStream&& other) noexcept;
  LossStream& operator=(LossStream&& other) noexcept;
  LossStream(const LossStream&) = delete;
  LossStream& operator=(const LossStream&) = delete;

 private:
  enum class Builtin { kL2Norm, kLinear, kQuadratic, kAbsRegression, kShiftedL1Norm, kCustom };

  LossStream(std::string name, Builtin which, StreamKind kind, int d, Domain domain);
  void set_round(std::int64_t t);
  double eval_current(const Vec& w) const;
  void init_oracle();

  std::string name_;
  Builtin which_;
  StreamKind kind_;
  int d_;
  Domain domain_;
  double g2_ = 0.0;
  std::optional<double> g1_;
  std::optional<Vec> comparator_hint_;
  std::optional<double> min_f_;
  ObjectiveParams params_;
  Vec w0_;
  Vec a_;
  double noise_ = 0.0;

  std::function<double(std::int64_t, const Vec&)> custom_eval_;
  std::function<Vec(std::int64_t, const Vec&)> custom_subgrad_;
  TwoPointOracle::EvalFn fixed_eval_;

  std::unique_ptr<TwoPointOracle> oracle_;
  std::int64_t current_round_ = -1;
  Vec xi_x_;        // abs_regression sample
  double xi_y_ = 0.0;
  Vec xi_center_;   // quadratic per-round center
};

}  // namespace zo

#endif  // ZO_OBJECTIVES_HPP_
