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

#ifndef ZO_GEOMETRY_HPP_
#define ZO_GEOMETRY_HPP_

#include <cstdint>

#include "zo/common.hpp"
#include "zo/rng.hpp"

namespace zo {

// A unit vector on the Euclidean sphere. Invariant: | ||coords||_2 - 1 | <= 1e-9.
class Direction {
 public:
  explicit Direction(Vec coords);
  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

 private:
  Vec coords_;
};

// Uniform direction on the unit sphere, via a normalized standard Gaussian
// vector. Deterministic given the rng state.
Direction sample_unit_sphere(int d, Rng& rng);

// Feasible sets: Euclidean ball, probability simplex, and the inward-shrunk
// simplex {w : sum w = 1, w_i >= (1-gamma)/d} obtained by mixing with the
// uniform point.
class Domain {
 public:
  enum class Kind { kL2Ball, kSimplex, kShrunkSimplex };

  static Domain l2_ball(int d, double radius);
  static Domain simplex(int d);  // requires d > 1

  Kind kind() const { return kind_; }
  int dim() const { return d_; }
  double radius() const;          // L2Ball only
  double shrink_factor() const;   // ShrunkSimplex only
  double coordinate_floor() const;  // (1-gamma)/d on ShrunkSimplex, else 0

  bool contains(const Vec& x, double tol = 1e-9) const;
  Vec center() const;
  // Random member: uniform on the ball, Dirichlet(1) on the simplex,
  // the matching mixture on the shrunk simplex.
  Vec sample_point(Rng& rng) const;

 private:
  Domain(Kind kind, int d, double radius, double gamma)
      : kind_(kind), d_(d), radius_(radius), gamma_(gamma) {}
  friend Domain shrink_domain(const Domain& domain, double gamma);

  Kind kind_;
  int d_;
  double radius_;
  double gamma_;
};

// Shrinks a domain so that members keep a margin to the boundary:
// L2Ball(rho) -> L2Ball(gamma*rho); Simplex -> the mixture set
// (1-lambda) simplex + lambda uniform with lambda = 1-gamma.
Domain shrink_domain(const Domain& domain, double gamma);

enum class NormId { kL2, kL1 };
enum class RegularizerId { kHalfSquaredL2, kNegEntropyScaled };

// Fitted upper bound on (E ||u||_inf^4)^{1/4} / sqrt(log(d)/d) for uniform
// sphere directions, d in [2, 4096]; the measured ratio peaks near 1.55 at
// d=2 and settles around 1.33. See diagnostics::infinity_norm_moment.
inline constexpr double kInfNormMomentConstant = 1.6;

// Geometry bundle for mirror descent: the norm, the 1-strongly-convex
// regularizer r, a bound R with sup_W r(w) <= R^2, and the fourth-moment
// constant p_star = upper bound on (E ||u||_*^4)^{1/4}.
struct MirrorSetup {
  NormId norm_id;
  RegularizerId regularizer_id;
  double R;
  double p_star;
  Domain domain;

  // r(w) = ||w||^2 / 2 on a ball of radius rho: R^2 = rho^2/2, p_star = 1.
  static MirrorSetup euclidean_ball(int d, double radius);
  // r(w) = sum_i w_i log(d w_i) on the simplex: R^2 = log d, dual norm is
  // the infinity norm. p_star defaults to kInfNormMomentConstant *
  // sqrt(log(d)/d); pass a positive override to replace it.
  static MirrorSetup entropic_simplex(int d, double p_star_override = 0.0);

  double regularizer_value(const Vec& w) const;
  double dual_norm(const Vec& g) const;
};

// argmax_{w in domain} <theta, w> - r(w).
//
// Closed forms: Euclidean projection of theta onto the ball for the
// half-squared-L2 regularizer; softmax (with max subtraction, probabilities
// floored at 1e-300) for the entropic regularizer on the simplex. On the
// shrunk simplex the entropic step is the floor-constrained softmax
// w_i = max(floor, C exp(theta_i)) with C chosen so the sum is 1.
Vec mirror_step(const MirrorSetup& setup, const Vec& theta);

}  // namespace zo

#endif  // ZO_GEOMETRY_HPP_
