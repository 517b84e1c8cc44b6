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

#include "zo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace zo {

namespace {
constexpr double kUnitNormTol = 1e-9;
constexpr double kProbabilityFloor = 1e-300;
}  // namespace

Direction::Direction(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) {
    throw std::invalid_argument("Direction: dimension must be >= 1");
  }
  const double norm = coords_.norm();
  if (std::abs(norm - 1.0) > kUnitNormTol) {
    throw std::invalid_argument("Direction: coordinates must have unit Euclidean norm");
  }
}

Direction sample_unit_sphere(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_unit_sphere: dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) v[i] = normal(rng);
    norm = v.norm();
  } while (norm < 1e-12);
  v /= norm;
  return Direction(std::move(v));
}

Domain Domain::l2_ball(int d, double radius) {
  if (d < 1) throw std::invalid_argument("Domain: dimension must be >= 1");
  if (!(radius > 0.0)) throw std::invalid_argument("Domain: radius must be > 0");
  return Domain(Kind::kL2Ball, d, radius, 1.0);
}

Domain Domain::simplex(int d) {
  if (d < 2) throw std::invalid_argument("Domain: simplex requires d > 1");
  return Domain(Kind::kSimplex, d, 0.0, 1.0);
}

double Domain::radius() const {
  if (kind_ != Kind::kL2Ball) throw std::logic_error("Domain: radius() on non-ball");
  return radius_;
}

double Domain::shrink_factor() const {
  if (kind_ != Kind::kShrunkSimplex) {
    throw std::logic_error("Domain: shrink_factor() on non-shrunk domain");
  }
  return gamma_;
}

double Domain::coordinate_floor() const {
  if (kind_ == Kind::kShrunkSimplex) return (1.0 - gamma_) / static_cast<double>(d_);
  return 0.0;
}

bool Domain::contains(const Vec& x, double tol) const {
  if (x.size() != d_) return false;
  switch (kind_) {
    case Kind::kL2Ball:
      return x.norm() <= radius_ + tol;
    case Kind::kSimplex:
      return x.minCoeff() >= -tol && std::abs(x.sum() - 1.0) <= tol;
    case Kind::kShrunkSimplex:
      return x.minCoeff() >= coordinate_floor() - tol && std::abs(x.sum() - 1.0) <= tol;
  }
  return false;
}

Vec Domain::center() const {
  if (kind_ == Kind::kL2Ball) return Vec::Zero(d_);
  return Vec::Constant(d_, 1.0 / static_cast<double>(d_));
}

Vec Domain::sample_point(Rng& rng) const {
  switch (kind_) {
    case Kind::kL2Ball: {
      const Direction u = sample_unit_sphere(d_, rng);
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double r = radius_ * std::pow(unif(rng), 1.0 / static_cast<double>(d_));
      return r * u.coords();
    }
    case Kind::kSimplex:
    case Kind::kShrunkSimplex: {
      std::exponential_distribution<double> expo(1.0);
      Vec w(d_);
      for (int i = 0; i < d_; ++i) w[i] = expo(rng);
      w /= w.sum();
      if (kind_ == Kind::kShrunkSimplex) {
        const double lambda = 1.0 - gamma_;
        w = gamma_ * w + Vec::Constant(d_, lambda / static_cast<double>(d_));
      }
      return w;
    }
  }
  throw std::logic_error("Domain: unknown kind");
}

Domain shrink_domain(const Domain& domain, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("shrink_domain: gamma must be in (0,1)");
  }
  switch (domain.kind()) {
    case Domain::Kind::kL2Ball:
      return Domain::l2_ball(domain.dim(), gamma * domain.radius());
    case Domain::Kind::kSimplex:
      return Domain(Domain::Kind::kShrunkSimplex, domain.dim(), 0.0, gamma);
    case Domain::Kind::kShrunkSimplex:
      throw std::invalid_argument("shrink_domain: domain already shrunk");
  }
  throw std::logic_error("shrink_domain: unknown kind");
}

MirrorSetup MirrorSetup::euclidean_ball(int d, double radius) {
  Domain dom = Domain::l2_ball(d, radius);
  return MirrorSetup{NormId::kL2, RegularizerId::kHalfSquaredL2,
                     radius / std::sqrt(2.0), 1.0, dom};
}

MirrorSetup MirrorSetup::entropic_simplex(int d, double p_star_override) {
  Domain dom = Domain::simplex(d);
  const double dd = static_cast<double>(d);
  const double p_star = p_star_override > 0.0
                            ? p_star_override
                            : kInfNormMomentConstant * std::sqrt(std::log(dd) / dd);
  return MirrorSetup{NormId::kL1, RegularizerId::kNegEntropyScaled, std::sqrt(std::log(dd)),
                     p_star, dom};
}

double MirrorSetup::regularizer_value(const Vec& w) const {
  switch (regularizer_id) {
    case RegularizerId::kHalfSquaredL2:
      return 0.5 * w.squaredNorm();
    case RegularizerId::kNegEntropyScaled: {
      const double dd = static_cast<double>(w.size());
      double r = 0.0;
      for (int i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0) r += w[i] * std::log(dd * w[i]);
      }
      return r;
    }
  }
  throw std::logic_error("MirrorSetup: unknown regularizer");
}

double MirrorSetup::dual_norm(const Vec& g) const {
  switch (norm_id) {
    case NormId::kL2:
      return g.norm();
    case NormId::kL1:
      return g.lpNorm<Eigen::Infinity>();
  }
  throw std::logic_error("MirrorSetup: unknown norm");
}

namespace {

// Entropic step with a per-coordinate floor m >= 0: maximizes
// <theta, w> - sum_i w_i log(d w_i) over {w : sum w = 1, w_i >= m}.
// KKT: unconstrained coordinates satisfy w_i = C exp(theta_i); the floor
// binds from the smallest theta upward, so scan the sorted tail.
Vec floored_softmax(const Vec& theta, double floor_m) {
  const int d = static_cast<int>(theta.size());
  const double mx = theta.maxCoeff();
  Vec s = (theta.array() - mx).exp();

  if (floor_m <= 0.0) {
    Vec w = s / s.sum();
    for (int i = 0; i < d; ++i) w[i] = std::max(w[i], kProbabilityFloor);
    return w;
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return s[a] > s[b]; });

  Vec w(d);
  double prefix = 0.0;
  for (int k = 1; k <= d; ++k) {
    prefix += s[order[k - 1]];
    const double c = (1.0 - static_cast<double>(d - k) * floor_m) / prefix;
    const bool kth_above = c * s[order[k - 1]] >= floor_m;
    const bool next_below = (k == d) || (c * s[order[k]] < floor_m);
    if (kth_above && next_below) {
      for (int j = 0; j < d; ++j) {
        w[order[j]] = j < k ? std::max(c * s[order[j]], floor_m) : floor_m;
      }
      return w;
    }
  }
  // Unreachable for feasible floors (d * m < 1); fall back to the floor point.
  return Vec::Constant(d, 1.0 / static_cast<double>(d));
}

}  // namespace

Vec mirror_step(const MirrorSetup& setup, const Vec& theta) {
  if (theta.size() != setup.domain.dim()) {
    throw std::invalid_argument("mirror_step: theta dimension mismatch");
  }
  if (!theta.allFinite()) {
    throw std::invalid_argument("mirror_step: theta has non-finite entries");
  }

  switch (setup.regularizer_id) {
    case RegularizerId::kHalfSquaredL2: {
      if (setup.domain.kind() != Domain::Kind::kL2Ball) {
        throw std::invalid_argument("mirror_step: half-squared-L2 step requires a ball domain");
      }
      const double rho = setup.domain.radius();
      const double norm = theta.norm();
      if (norm <= rho) return theta;
      return theta * (rho / norm);
    }
    case RegularizerId::kNegEntropyScaled: {
      if (setup.domain.kind() != Domain::Kind::kSimplex &&
          setup.domain.kind() != Domain::Kind::kShrunkSimplex) {
        throw std::invalid_argument("mirror_step: entropic step requires a simplex domain");
      }
      return floored_softmax(theta, setup.domain.coordinate_floor());
    }
  }
  throw std::logic_error("mirror_step: unknown regularizer");
}

}  // namespace zo
