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

#include "zo/geometry.hpp"

using zo::Direction;
using zo::Domain;
using zo::MirrorSetup;
using zo::Vec;

TEST_CASE("sample_unit_sphere basics") {
  zo::Rng rng = zo::make_rng(42);

  SUBCASE("d=1 is a fair coin over +-1") {
    int plus = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const Direction u = zo::sample_unit_sphere(1, rng);
      CHECK(std::abs(std::abs(u.coords()[0]) - 1.0) < 1e-12);
      if (u.coords()[0] > 0) ++plus;
    }
    // 4 sigma band around n/2.
    CHECK(std::abs(plus - n / 2) < 4.0 * std::sqrt(n / 4.0));
  }

  SUBCASE("unit norm at d=16") {
    for (int i = 0; i < 100; ++i) {
      const Direction u = zo::sample_unit_sphere(16, rng);
      CHECK(std::abs(u.coords().norm() - 1.0) <= 1e-9);
    }
  }

  SUBCASE("coordinate means vanish at d=3") {
    const int n = 100000;
    Vec sum = Vec::Zero(3);
    for (int i = 0; i < n; ++i) sum += zo::sample_unit_sphere(3, rng).coords();
    const Vec mean = sum / n;
    for (int j = 0; j < 3; ++j) CHECK(std::abs(mean[j]) < 4.0 / std::sqrt(double(n)));
  }

  SUBCASE("second moment is I/d") {
    const int d = 4;
    const int n = 100000;
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      const Vec u = zo::sample_unit_sphere(d, rng).coords();
      second += u * u.transpose();
    }
    second /= n;
    // Var(u_i u_j) <= E[u_i^2 u_j^2] <= 3/(d(d+2)); 5 standard errors.
    const double se = std::sqrt(3.0 / (d * (d + 2.0)) / n);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const double expected = i == j ? 1.0 / d : 0.0;
        CHECK(std::abs(second(i, j) - expected) < 5.0 * se);
      }
    }
  }

  SUBCASE("invalid dimension") {
    CHECK_THROWS_AS(zo::sample_unit_sphere(0, rng), std::invalid_argument);
  }
}

TEST_CASE("domain membership") {
  const Domain ball = Domain::l2_ball(2, 1.0);
  Vec in(2), out(2);
  in << 0.6, 0.8;
  out << 0.8, 0.8;
  CHECK(ball.contains(in));
  CHECK_FALSE(ball.contains(out));

  const Domain simplex = Domain::simplex(3);
  Vec s(3);
  s << 0.2, 0.3, 0.5;
  CHECK(simplex.contains(s));
  s << 0.5, 0.6, -0.1;
  CHECK_FALSE(simplex.contains(s));
  s << 0.5, 0.6, 0.1;
  CHECK_FALSE(simplex.contains(s));  // sums to 1.2

  CHECK_THROWS_AS(Domain::simplex(1), std::invalid_argument);
  CHECK_THROWS_AS(Domain::l2_ball(2, 0.0), std::invalid_argument);
}

TEST_CASE("shrink_domain") {
  zo::Rng rng = zo::make_rng(7);

  SUBCASE("ball shrinks by scaling; members survive perturbation") {
    const Domain ball = Domain::l2_ball(3, 1.0);
    const Domain shrunk = zo::shrink_domain(ball, 0.9);
    CHECK(shrunk.kind() == Domain::Kind::kL2Ball);
    CHECK(shrunk.radius() == doctest::Approx(0.9));
    for (int i = 0; i < 200; ++i) {
      const Vec w = shrunk.sample_point(rng);
      const Vec probe = w + 0.1 * zo::sample_unit_sphere(3, rng).coords();
      CHECK(ball.contains(probe, 1e-9));
    }
    const Domain big = zo::shrink_domain(Domain::l2_ball(3, 2.0), 0.5);
    CHECK(big.radius() == doctest::Approx(1.0));
  }

  SUBCASE("simplex shrink floors the coordinates") {
    const Domain simplex = Domain::simplex(3);
    const Domain shrunk = zo::shrink_domain(simplex, 0.97);
    const double floor = shrunk.coordinate_floor();
    CHECK(floor == doctest::Approx(0.01));
    for (int i = 0; i < 500; ++i) {
      const Vec w = shrunk.sample_point(rng);
      CHECK(w.minCoeff() >= floor - 1e-12);
      CHECK(std::abs(w.sum() - 1.0) <= 1e-9);
      CHECK(simplex.contains(w));
    }
  }

  SUBCASE("invalid gamma") {
    CHECK_THROWS_AS(zo::shrink_domain(Domain::l2_ball(2, 1.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zo::shrink_domain(Domain::l2_ball(2, 1.0), 1.0), std::invalid_argument);
  }
}

TEST_CASE("mirror_step closed forms") {
  SUBCASE("euclidean projection") {
    const MirrorSetup setup = MirrorSetup::euclidean_ball(2, 1.0);
    Vec theta(2);
    theta << 3.0, 4.0;
    Vec w = zo::mirror_step(setup, theta);
    CHECK(w[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.8).epsilon(1e-12));

    theta << 0.1, 0.2;
    w = zo::mirror_step(setup, theta);
    CHECK(w[0] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(0.2).epsilon(1e-15));
  }

  SUBCASE("entropic softmax") {
    const MirrorSetup setup3 = MirrorSetup::entropic_simplex(3);
    const Vec w = zo::mirror_step(setup3, Vec::Zero(3));
    for (int i = 0; i < 3; ++i) CHECK(w[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const MirrorSetup setup2 = MirrorSetup::entropic_simplex(2);
    Vec theta(2);
    theta << std::log(2.0), 0.0;
    const Vec w2 = zo::mirror_step(setup2, theta);
    CHECK(w2[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(w2[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("errors") {
    const MirrorSetup setup = MirrorSetup::euclidean_ball(2, 1.0);
    CHECK_THROWS_AS(zo::mirror_step(setup, Vec::Zero(3)), std::invalid_argument);
    Vec bad(2);
    bad << 1.0, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(zo::mirror_step(setup, bad), std::invalid_argument);
  }
}

TEST_CASE("mirror_step properties") {
  zo::Rng rng = zo::make_rng(3);
  std::normal_distribution<double> normal(0.0, 2.0);

  SUBCASE("membership and optimality, euclidean") {
    const MirrorSetup setup = MirrorSetup::euclidean_ball(4, 1.5);
    for (int i = 0; i < 10000; ++i) {
      Vec theta(4);
      for (int j = 0; j < 4; ++j) theta[j] = normal(rng);
      const Vec w = zo::mirror_step(setup, theta);
      CHECK(setup.domain.contains(w, 1e-9));
      const Vec candidate = setup.domain.sample_point(rng);
      const double step_value = theta.dot(w) - setup.regularizer_value(w);
      const double cand_value = theta.dot(candidate) - setup.regularizer_value(candidate);
      CHECK(step_value >= cand_value - 1e-8);
    }
  }

  SUBCASE("membership and optimality, entropic") {
    const MirrorSetup setup = MirrorSetup::entropic_simplex(5);
    for (int i = 0; i < 10000; ++i) {
      Vec theta(5);
      for (int j = 0; j < 5; ++j) theta[j] = normal(rng);
      const Vec w = zo::mirror_step(setup, theta);
      CHECK(setup.domain.contains(w, 1e-9));
      const Vec candidate = setup.domain.sample_point(rng);
      const double step_value = theta.dot(w) - setup.regularizer_value(w);
      const double cand_value = theta.dot(candidate) - setup.regularizer_value(candidate);
      CHECK(step_value >= cand_value - 1e-8);
    }
  }

  SUBCASE("optimality on the shrunk simplex") {
    MirrorSetup setup = MirrorSetup::entropic_simplex(4);
    setup.domain = zo::shrink_domain(setup.domain, 0.9);
    for (int i = 0; i < 5000; ++i) {
      Vec theta(4);
      for (int j = 0; j < 4; ++j) theta[j] = normal(rng);
      const Vec w = zo::mirror_step(setup, theta);
      CHECK(setup.domain.contains(w, 1e-9));
      const Vec candidate = setup.domain.sample_point(rng);
      const double step_value = theta.dot(w) - setup.regularizer_value(w);
      const double cand_value = theta.dot(candidate) - setup.regularizer_value(candidate);
      CHECK(step_value >= cand_value - 1e-8);
    }
  }

  SUBCASE("entropic shift invariance") {
    const MirrorSetup setup = MirrorSetup::entropic_simplex(4);
    for (int i = 0; i < 200; ++i) {
      Vec theta(4);
      for (int j = 0; j < 4; ++j) theta[j] = normal(rng);
      const double c = normal(rng);
      const Vec w1 = zo::mirror_step(setup, theta);
      const Vec w2 = zo::mirror_step(setup, Vec(theta.array() + c));
      CHECK((w1 - w2).lpNorm<Eigen::Infinity>() <= 1e-9);
    }
  }
}

TEST_CASE("mirror setup constants") {
  const MirrorSetup ball = MirrorSetup::euclidean_ball(8, 2.0);
  CHECK(ball.R * ball.R == doctest::Approx(2.0));  // rho^2 / 2
  CHECK(ball.p_star == 1.0);

  const MirrorSetup ent = MirrorSetup::entropic_simplex(16);
  CHECK(ent.R * ent.R == doctest::Approx(std::log(16.0)));
  CHECK(ent.p_star == doctest::Approx(zo::kInfNormMomentConstant * std::sqrt(std::log(16.0) / 16.0)));

  // Regularizer peaks at vertices: r(e_i) = log d.
  Vec vertex = Vec::Zero(16);
  vertex[3] = 1.0;
  CHECK(ent.regularizer_value(vertex) == doctest::Approx(std::log(16.0)));
  CHECK(ent.regularizer_value(Vec::Constant(16, 1.0 / 16.0)) == doctest::Approx(0.0));
}
