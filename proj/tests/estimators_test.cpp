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

#include "test_util.hpp"
#include "zo/estimators.hpp"

using zo::Direction;
using zo::GradientEstimate;
using zo::TwoPointOracle;
using zo::Vec;

namespace {

Direction axis(int d, int i, double sign = 1.0) {
  Vec u = Vec::Zero(d);
  u[i] = sign;
  return Direction(u);
}

TwoPointOracle norm_oracle(int d) {
  return TwoPointOracle(d, [](const Vec& w) { return w.norm(); });
}

}  // namespace

TEST_CASE("two_point_gradient closed cases") {
  zo::Rng rng = zo::make_rng(11);

  SUBCASE("symmetric kink gives an exact zero") {
    TwoPointOracle oracle = norm_oracle(5);
    for (int i = 0; i < 20; ++i) {
      const Direction u = zo::sample_unit_sphere(5, rng);
      const GradientEstimate est = zo::two_point_gradient(oracle, Vec::Zero(5), 0.37, u);
      CHECK(est.g.norm() == 0.0);
    }
  }

  SUBCASE("central difference is exact for quadratics") {
    TwoPointOracle oracle(1, [](const Vec& w) { return w[0] * w[0]; });
    Vec w(1);
    w << 1.0;
    const GradientEstimate est = zo::two_point_gradient(oracle, w, 0.1, axis(1, 0));
    CHECK(est.g[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(est.f_plus == doctest::Approx(1.21));
    CHECK(est.f_minus_or_anchor == doctest::Approx(0.81));
  }

  SUBCASE("linear objective: g = d <a,u> u") {
    Vec a(2);
    a << 1.0, 0.0;
    TwoPointOracle oracle(2, [a](const Vec& w) { return a.dot(w); });
    Vec w(2);
    w << 0.3, -0.4;

    const GradientEstimate perp = zo::two_point_gradient(oracle, w, 0.05, axis(2, 1));
    CHECK(perp.g.norm() == doctest::Approx(0.0).epsilon(1e-12));

    const GradientEstimate along = zo::two_point_gradient(oracle, w, 0.05, axis(2, 0));
    CHECK(along.g[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(along.g[1] == doctest::Approx(0.0));
  }

  SUBCASE("estimate is collinear with u and scaled exactly") {
    TwoPointOracle oracle(4, [](const Vec& w) { return std::sin(w[0]) + w.squaredNorm(); });
    for (int i = 0; i < 200; ++i) {
      const Direction u = zo::sample_unit_sphere(4, rng);
      Vec w = 0.3 * zo::sample_unit_sphere(4, rng).coords();
      const GradientEstimate est = zo::two_point_gradient(oracle, w, 0.01, u);
      const double scale = 4.0 / (2.0 * 0.01) * (est.f_plus - est.f_minus_or_anchor);
      CHECK((est.g - scale * u.coords()).norm() == 0.0);
      // Collinearity: component orthogonal to u vanishes.
      const Vec residual = est.g - est.g.dot(u.coords()) * u.coords();
      CHECK(residual.lpNorm<Eigen::Infinity>() <= 1e-12 * (1.0 + est.g.norm()));
      CHECK(est.queries_used == 2);
    }
  }

  SUBCASE("errors") {
    TwoPointOracle oracle = norm_oracle(3);
    zo::Rng r = zo::make_rng(1);
    const Direction u = zo::sample_unit_sphere(3, r);
    CHECK_THROWS_AS(zo::two_point_gradient(oracle, Vec::Zero(3), 0.0, u), std::invalid_argument);
    CHECK_THROWS_AS(zo::two_point_gradient(oracle, Vec::Zero(3), -1.0, u), std::invalid_argument);
    CHECK_THROWS_AS(zo::two_point_gradient(oracle, Vec::Zero(2), 0.1, u), std::invalid_argument);

    TwoPointOracle bad(3, [](const Vec& w) {
      return w[0] > 0.0 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    });
    Vec w = Vec::Zero(3);
    try {
      zo::two_point_gradient(bad, w, 0.5, axis(3, 0));
      FAIL("expected OracleFailure");
    } catch (const zo::OracleFailure& e) {
      CHECK(e.point().size() == 3);
      CHECK(e.point()[0] == doctest::Approx(0.5));  // the offending probe
    }
  }
}

TEST_CASE("anchored_gradient closed cases") {
  zo::Rng rng = zo::make_rng(12);

  SUBCASE("kink blowup: ||g||^2 = d^2 at the origin") {
    for (int d : {2, 7, 30}) {
      TwoPointOracle oracle = norm_oracle(d);
      const Direction u = zo::sample_unit_sphere(d, rng);
      const GradientEstimate est = zo::anchored_gradient(oracle, Vec::Zero(d), 0.2, u);
      CHECK((est.g - double(d) * u.coords()).norm() <= 1e-12 * d);
      CHECK(est.g.squaredNorm() == doctest::Approx(double(d) * double(d)).epsilon(1e-12));
    }
  }

  SUBCASE("agrees with symmetric estimator on linear objectives") {
    Vec a(2);
    a << 1.0, 0.0;
    TwoPointOracle oracle(2, [a](const Vec& w) { return a.dot(w); });
    const GradientEstimate est = zo::anchored_gradient(oracle, Vec::Zero(2), 0.3, axis(2, 0));
    CHECK(est.g[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(est.g[1] == doctest::Approx(0.0));
  }

  SUBCASE("one-sided difference carries the curvature bias") {
    TwoPointOracle oracle(1, [](const Vec& w) { return w[0] * w[0]; });
    Vec w(1);
    w << 1.0;
    const GradientEstimate est = zo::anchored_gradient(oracle, w, 0.1, axis(1, 0));
    CHECK(est.g[0] == doctest::Approx(2.1).epsilon(1e-12));
  }
}

TEST_CASE("query accounting") {
  TwoPointOracle oracle = norm_oracle(3);
  zo::Rng rng = zo::make_rng(5);
  const Direction u = zo::sample_unit_sphere(3, rng);

  zo::two_point_gradient(oracle, Vec::Zero(3), 0.1, u);
  CHECK(oracle.query_count() == 2);
  zo::anchored_gradient(oracle, Vec::Zero(3), 0.1, u);
  CHECK(oracle.query_count() == 4);
  oracle.eval_diagnostic(Vec::Zero(3));
  CHECK(oracle.query_count() == 4);
  CHECK(oracle.diagnostic_count() == 1);

  zo::smoothed_value(oracle, Vec::Zero(3), 0.1, 50, rng);
  CHECK(oracle.query_count() == 54);
  zo::smoothed_gradient_mc(oracle, Vec::Zero(3), 0.1, 50, rng);
  CHECK(oracle.query_count() == 154);
}

TEST_CASE("smoothed_value") {
  zo::Rng rng = zo::make_rng(21);

  SUBCASE("norm at the origin smooths to exactly delta") {
    TwoPointOracle oracle = norm_oracle(6);
    const zo::MonteCarloValue v = zo::smoothed_value(oracle, Vec::Zero(6), 0.1, 5000, rng);
    CHECK(std::abs(v.estimate - 0.1) <= 4.0 * std::max(v.std_error, 1e-15));
  }

  SUBCASE("linear functions are invariant under smoothing") {
    Vec a(3);
    a << 0.5, -1.0, 2.0;
    TwoPointOracle oracle(3, [a](const Vec& w) { return a.dot(w); });
    Vec w(3);
    w << 0.2, 0.1, -0.3;
    const zo::MonteCarloValue v = zo::smoothed_value(oracle, w, 0.25, 20000, rng);
    CHECK(std::abs(v.estimate - a.dot(w)) <= 4.0 * v.std_error);
  }

  SUBCASE("matches the 2-D quadrature oracle") {
    // E ||w + delta u|| over the circle, w = (1,0), delta = 0.5.
    const double reference = zo::test::simpson(
                                 [](double phi) {
                                   return std::sqrt(1.0 + 0.25 + std::cos(phi));
                                 },
                                 0.0, 2.0 * M_PI, 20000) /
                             (2.0 * M_PI);
    CHECK(reference == doctest::Approx(1.0635444).epsilon(1e-6));
    TwoPointOracle oracle = norm_oracle(2);
    Vec w(2);
    w << 1.0, 0.0;
    const zo::MonteCarloValue v = zo::smoothed_value(oracle, w, 0.5, 200000, rng);
    CHECK(std::abs(v.estimate - reference) <= 4.0 * v.std_error);
  }

  SUBCASE("needs two samples") {
    TwoPointOracle oracle = norm_oracle(2);
    CHECK_THROWS_AS(zo::smoothed_value(oracle, Vec::Zero(2), 0.1, 1, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("smoothed_gradient_mc") {
  zo::Rng rng = zo::make_rng(31);

  SUBCASE("linear: mean recovers the coefficients") {
    Vec a(4);
    a << 1.0, -2.0, 0.5, 0.0;
    TwoPointOracle oracle(4, [a](const Vec& w) { return a.dot(w); });
    const zo::MonteCarloVector g =
        zo::smoothed_gradient_mc(oracle, Vec::Zero(4), 0.05, 200000, rng);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(g.estimate[i] - a[i]) <= 4.0 * std::max(g.std_error[i], 1e-15));
    }
  }

  SUBCASE("norm at origin: identically zero samples") {
    TwoPointOracle oracle = norm_oracle(3);
    const zo::MonteCarloVector g = zo::smoothed_gradient_mc(oracle, Vec::Zero(3), 0.1, 100, rng);
    CHECK(g.estimate.norm() == 0.0);
    CHECK(g.std_error.norm() == 0.0);
  }

  SUBCASE("quadratic: smoothed gradient equals w - w0") {
    TwoPointOracle oracle(2, [](const Vec& w) { return 0.5 * w.squaredNorm(); });
    Vec w(2);
    w << 1.0, 2.0;
    const zo::MonteCarloVector g = zo::smoothed_gradient_mc(oracle, w, 0.01, 1000000, rng);
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(g.estimate[i] - w[i]) <= 4.0 * g.std_error[i]);
    }
  }
}

TEST_CASE("smoothing gap is bounded by delta G2") {
  zo::Rng rng = zo::make_rng(41);
  const int d = 5;
  const double delta = 0.07;
  TwoPointOracle oracle = norm_oracle(d);  // G2 = 1
  const zo::Domain ball = zo::Domain::l2_ball(d, 1.0);
  for (int k = 0; k < 30; ++k) {
    const Vec w = ball.sample_point(rng);
    const zo::MonteCarloValue v = zo::smoothed_value(oracle, w, delta, 4000, rng);
    CHECK(std::abs(v.estimate - w.norm()) <= delta + 4.0 * v.std_error);
  }
}
