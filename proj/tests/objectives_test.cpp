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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zo/objectives.hpp"
#include "zo/regret.hpp"

using zo::Domain;
using zo::LossStream;
using zo::ObjectiveParams;
using zo::RunRecord;
using zo::StreamKind;
using zo::Vec;

namespace {

ObjectiveParams ball_params(int d, std::uint64_t seed, double noise = 0.0) {
  ObjectiveParams p;
  p.domain = Domain::l2_ball(d, 1.0);
  p.seed = seed;
  p.noise_std = noise;
  return p;
}

// Minimal record with the given constant iterate repeated T times.
RunRecord constant_record(const Vec& w, std::int64_t T, LossStream& stream) {
  RunRecord rec;
  rec.seed = 99;
  rec.params.T = T;
  rec.params.d = static_cast<int>(w.size());
  rec.params.eta = 1.0;
  for (std::int64_t t = 0; t < T; ++t) {
    rec.iterates.push_back(w);
    rec.dual_states.push_back(Vec::Zero(w.size()));
    rec.losses.push_back(stream.oracle_for_round(t).eval_diagnostic(w));
  }
  rec.average_iterate = w;
  rec.total_queries = 0;
  rec.diagnostic_queries = T;
  return rec;
}

}  // namespace

TEST_CASE("builtin objective values") {
  SUBCASE("l2norm with centered target") {
    ObjectiveParams p = ball_params(3, 1);
    p.w0 = Vec(Vec::Zero(3));
    LossStream s = LossStream::builtin("l2norm", 3, std::move(p));
    CHECK(s.kind() == StreamKind::kFixed);
    CHECK(s.g2() == 1.0);
    CHECK(s.oracle_for_round(0).eval_diagnostic(Vec::Zero(3)) == 0.0);
    Vec e1 = Vec::Zero(3);
    e1[0] = 1.0;
    CHECK(s.oracle_for_round(1).eval_diagnostic(e1) == doctest::Approx(1.0));
  }

  SUBCASE("linear has the boundary minimizer") {
    LossStream s = LossStream::builtin("linear", 3, ball_params(3, 2));
    REQUIRE(s.comparator_hint().has_value());
    const Vec w_star = *s.comparator_hint();
    CHECK(w_star[0] == doctest::Approx(-1.0));
    CHECK(s.oracle_for_round(0).eval_diagnostic(w_star) == doctest::Approx(-1.0));
  }

  SUBCASE("abs_regression is realizable at w0") {
    LossStream s = LossStream::builtin("abs_regression", 4, ball_params(4, 3));
    REQUIRE(s.comparator_hint().has_value());
    const Vec w0 = *s.comparator_hint();
    for (std::int64_t t = 0; t < 50; ++t) {
      CHECK(s.oracle_for_round(t).eval_diagnostic(w0) == doctest::Approx(0.0));
    }
    CHECK(*s.min_population_value() == 0.0);
  }

  SUBCASE("unknown name") {
    CHECK_THROWS_AS(LossStream::builtin("nope", 3, ball_params(3, 1)), std::invalid_argument);
  }
}

TEST_CASE("declared Lipschitz constants hold on sampled pairs") {
  zo::Rng rng = zo::make_rng(77);
  const int d = 6;
  const Domain ball = Domain::l2_ball(d, 1.0);
  for (const std::string name :
       {"l2norm", "linear", "quadratic", "abs_regression", "shifted_l1norm"}) {
    LossStream s = LossStream::builtin(name, d, ball_params(d, 11, 0.3));
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
      const std::int64_t t = k % 17;
      auto f = s.eval_fn(t);
      const Vec x = ball.sample_point(rng);
      const Vec y = ball.sample_point(rng);
      const double diff = std::abs(f(x) - f(y));
      if (diff > s.g2() * (x - y).norm() + 1e-12) ++violations;
      if (s.g1() && diff > *s.g1() * (x - y).lpNorm<1>() + 1e-12) ++violations;
    }
    CHECK_MESSAGE(violations == 0, name);
  }
}

TEST_CASE("stochastic rounds are replayable and exchangeable") {
  LossStream s = LossStream::builtin("abs_regression", 3, ball_params(3, 5, 0.2));
  Vec w(3);
  w << 0.1, -0.2, 0.3;

  const double v7 = s.oracle_for_round(7).eval_diagnostic(w);
  const double v8 = s.oracle_for_round(8).eval_diagnostic(w);
  CHECK(v7 != v8);  // fresh draws per round
  // Replays and out-of-order access see identical functions.
  LossStream copy = s.replay_copy();
  CHECK(copy.oracle_for_round(8).eval_diagnostic(w) == v8);
  CHECK(copy.oracle_for_round(7).eval_diagnostic(w) == v7);
  CHECK(s.oracle_for_round(7).eval_diagnostic(w) == v7);
}

TEST_CASE("population value matches closed forms") {
  SUBCASE("quadratic") {
    const int d = 3;
    ObjectiveParams p = ball_params(d, 9, 0.5);
    p.w0 = Vec(Vec::Zero(d));
    LossStream s = LossStream::builtin("quadratic", d, std::move(p));
    // min F = 0.5 b^2 d/(d+2) at w0.
    const double min_f = 0.5 * 0.25 * 3.0 / 5.0;
    CHECK(*s.min_population_value() == doctest::Approx(min_f));
    const zo::MonteCarloValue at_min = s.population_value(Vec::Zero(d), 200000, 123);
    CHECK(std::abs(at_min.estimate - min_f) <= 4.0 * at_min.std_error);

    Vec w(d);
    w << 0.4, 0.0, -0.3;
    const zo::MonteCarloValue off = s.population_value(w, 200000, 124);
    CHECK(std::abs(off.estimate - (0.5 * w.squaredNorm() + min_f)) <= 4.0 * off.std_error);
  }

  SUBCASE("abs_regression noise floor") {
    LossStream s = LossStream::builtin("abs_regression", 4, ball_params(4, 10, 0.4));
    CHECK(*s.min_population_value() == doctest::Approx(0.2));  // E|eps| = b/2
    const zo::MonteCarloValue at_min =
        s.population_value(*s.comparator_hint(), 200000, 125);
    CHECK(std::abs(at_min.estimate - 0.2) <= 4.0 * at_min.std_error);
  }

  SUBCASE("fixed streams refuse") {
    LossStream s = LossStream::builtin("l2norm", 3, ball_params(3, 2));
    CHECK_THROWS_AS(s.population_value(Vec::Zero(3), 100, 1), std::invalid_argument);
  }
}

TEST_CASE("regret computation") {
  SUBCASE("sitting at the comparator gives zero regret") {
    LossStream s = LossStream::builtin("linear", 2, ball_params(2, 4));
    const Vec w_star = *s.comparator_hint();
    RunRecord rec = constant_record(w_star, 10, s);
    const zo::RegretReport rep = zo::regret(rec, s);
    CHECK(rep.average_regret == doctest::Approx(0.0));
  }

  SUBCASE("staying at the center of the ball against e1-linear loss") {
    LossStream s = LossStream::builtin("linear", 2, ball_params(2, 4));
    RunRecord rec = constant_record(Vec::Zero(2), 25, s);
    const zo::RegretReport rep = zo::regret(rec, s);
    CHECK(rep.average_regret == doctest::Approx(1.0));  // 0 - (-1)
  }

  SUBCASE("recomputation is bit-identical") {
    LossStream s = LossStream::builtin("abs_regression", 3, ball_params(3, 6, 0.1));
    RunRecord rec = constant_record(Vec::Zero(3), 40, s);
    const zo::RegretReport r1 = zo::regret(rec, s, {}, 5000);
    const zo::RegretReport r2 = zo::regret(rec, s, {}, 5000);
    CHECK(r1.average_regret == r2.average_regret);
    REQUIRE(r1.optimization_error.has_value());
    CHECK(*r1.optimization_error == *r2.optimization_error);
  }

  SUBCASE("optimal comparator dominates sampled ones") {
    zo::Rng rng = zo::make_rng(15);
    LossStream s = LossStream::builtin("abs_regression", 3, ball_params(3, 8));
    RunRecord rec = constant_record(Vec::Constant(3, 0.2), 60, s);
    const double at_hint = zo::regret(rec, s).average_regret;  // hint = population optimum
    for (int i = 0; i < 25; ++i) {
      const Vec probe = s.domain().sample_point(rng);
      CHECK(at_hint >= zo::regret(rec, s, probe).average_regret - 1e-12);
    }
  }

  SUBCASE("empty record") {
    LossStream s = LossStream::builtin("l2norm", 3, ball_params(3, 2));
    RunRecord empty;
    CHECK_THROWS_AS(zo::regret(empty, s), std::invalid_argument);
  }
}

TEST_CASE("offline comparator solve") {
  SUBCASE("linear on the ball lands on the boundary") {
    LossStream s = LossStream::builtin("linear", 3, ball_params(3, 2));
    double residual = 0.0;
    const Vec w = zo::solve_offline_comparator(s, 20, 20000, 1e-4, &residual);
    CHECK((w - *s.comparator_hint()).norm() <= 1e-6);
    CHECK(residual <= 1e-4);
  }

  SUBCASE("l2norm recovers the center") {
    ObjectiveParams p = ball_params(4, 3);
    Vec w0(4);
    w0 << 0.2, -0.1, 0.3, 0.0;
    p.w0 = w0;
    LossStream s = LossStream::builtin("l2norm", 4, std::move(p));
    double residual = 0.0;
    const Vec w = zo::solve_offline_comparator(s, 5, 20000, 1e-4, &residual);
    CHECK((w - w0).norm() <= 1e-6);
    CHECK(residual <= 1e-4);
  }

  SUBCASE("realizable abs_regression at desk scale") {
    LossStream s = LossStream::builtin("abs_regression", 4, ball_params(4, 12));
    double residual = 0.0;
    const Vec w = zo::solve_offline_comparator(s, 100, 60000, 1e-4, &residual);
    CHECK((w - *s.comparator_hint()).norm() <= 1e-4);
    CHECK(residual <= 1e-4);
  }

  SUBCASE("stochastic quadratic hits the sample mean of centers") {
    LossStream s = LossStream::builtin("quadratic", 3, ball_params(3, 13, 0.4));
    const std::int64_t T = 50;
    Vec mean_center = Vec::Zero(3);
    LossStream probe = s.replay_copy();
    for (std::int64_t t = 0; t < T; ++t) {
      // Recover the round center from the analytic subgradient at 0.
      mean_center -= probe.subgradient_at(t, Vec::Zero(3));
    }
    mean_center /= static_cast<double>(T);
    const Vec w = zo::solve_offline_comparator(s, T, 20000);
    CHECK((w - mean_center).norm() <= 1e-6);
  }
}
