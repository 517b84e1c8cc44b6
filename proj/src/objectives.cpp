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

#include "zo/objectives.hpp"

#include <cmath>

#include "zo/stats.hpp"

namespace zo {

namespace {

constexpr std::uint64_t kDefaultsTag = 0x5EEDu;
constexpr std::uint64_t kRoundTag = 0x0FF5E7u;

double sign0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

Vec uniform_ball_point(int d, double radius, Rng& rng) {
  if (radius <= 0.0) return Vec::Zero(d);
  const Direction u = sample_unit_sphere(d, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = radius * std::pow(unif(rng), 1.0 / static_cast<double>(d));
  return r * u.coords();
}

// sup over the domain of ||w - w0||_2; exact for balls and simplices
// (the maximum of a convex function sits at an extreme point).
double max_distance_over_domain(const Domain& domain, const Vec& w0) {
  switch (domain.kind()) {
    case Domain::Kind::kL2Ball:
      return domain.radius() + w0.norm();
    case Domain::Kind::kSimplex:
    case Domain::Kind::kShrunkSimplex: {
      double best = 0.0;
      for (int i = 0; i < domain.dim(); ++i) {
        Vec vertex = Vec::Zero(domain.dim());
        vertex[i] = 1.0;
        best = std::max(best, (vertex - w0).norm());
      }
      return best;
    }
  }
  throw std::logic_error("max_distance_over_domain: unknown kind");
}

}  // namespace

LossStream::LossStream(std::string name, Builtin which, StreamKind kind, int d, Domain domain)
    : name_(std::move(name)), which_(which), kind_(kind), d_(d), domain_(std::move(domain)) {}

// The oracle closure points at *this, so moves must rebuild it against the
// destination object.
LossStream::LossStream(LossStream&& other) noexcept
    : name_(std::move(other.name_)),
      which_(other.which_),
      kind_(other.kind_),
      d_(other.d_),
      domain_(std::move(other.domain_)),
      g2_(other.g2_),
      g1_(other.g1_),
      comparator_hint_(std::move(other.comparator_hint_)),
      min_f_(other.min_f_),
      params_(std::move(other.params_)),
      w0_(std::move(other.w0_)),
      a_(std::move(other.a_)),
      noise_(other.noise_),
      custom_eval_(std::move(other.custom_eval_)),
      custom_subgrad_(std::move(other.custom_subgrad_)),
      fixed_eval_(std::move(other.fixed_eval_)),
      current_round_(other.current_round_),
      xi_x_(std::move(other.xi_x_)),
      xi_y_(other.xi_y_),
      xi_center_(std::move(other.xi_center_)) {
  init_oracle();
}

LossStream& LossStream::operator=(LossStream&& other) noexcept {
  if (this == &other) return *this;
  name_ = std::move(other.name_);
  which_ = other.which_;
  kind_ = other.kind_;
  d_ = other.d_;
  domain_ = std::move(other.domain_);
  g2_ = other.g2_;
  g1_ = other.g1_;
  comparator_hint_ = std::move(other.comparator_hint_);
  min_f_ = other.min_f_;
  params_ = std::move(other.params_);
  w0_ = std::move(other.w0_);
  a_ = std::move(other.a_);
  noise_ = other.noise_;
  custom_eval_ = std::move(other.custom_eval_);
  custom_subgrad_ = std::move(other.custom_subgrad_);
  fixed_eval_ = std::move(other.fixed_eval_);
  current_round_ = other.current_round_;
  xi_x_ = std::move(other.xi_x_);
  xi_y_ = other.xi_y_;
  xi_center_ = std::move(other.xi_center_);
  init_oracle();
  return *this;
}

void LossStream::init_oracle() {
  oracle_ = std::make_unique<TwoPointOracle>(
      d_, [this](const Vec& w) { return eval_current(w); });
  oracle_->set_round_reset([this](std::int64_t t) { set_round(t); });
  oracle_->lipschitz_l2 = g2_;
  if (g1_) oracle_->lipschitz_l1 = g1_;
}

LossStream LossStream::builtin(const std::string& name, int d, ObjectiveParams params) {
  if (d < 1) throw std::invalid_argument("builtin objective: dimension must be >= 1");
  Domain domain = params.domain ? *params.domain : Domain::l2_ball(d, 1.0);
  if (domain.dim() != d) throw std::invalid_argument("builtin objective: domain dimension mismatch");
  if (params.noise_std < 0.0) throw std::invalid_argument("builtin objective: noise_std must be >= 0");

  Rng defaults_rng = make_rng(mix_seed(params.seed, kDefaultsTag));
  const bool on_simplex = domain.kind() != Domain::Kind::kL2Ball;

  // Default center: half-scale interior point, deterministic in the seed.
  Vec w0;
  if (params.w0) {
    w0 = *params.w0;
    if (w0.size() != d) throw std::invalid_argument("builtin objective: w0 dimension mismatch");
  } else if (on_simplex) {
    Vec mid = domain.sample_point(defaults_rng);
    w0 = 0.5 * mid + 0.5 * domain.center();
  } else {
    w0 = 0.5 * domain.radius() * sample_unit_sphere(d, defaults_rng).coords();
  }

  Vec a;
  if (params.a) {
    a = *params.a;
    if (a.size() != d) throw std::invalid_argument("builtin objective: a dimension mismatch");
  } else {
    a = Vec::Zero(d);
    a[0] = 1.0;
  }

  const double b = params.noise_std;

  if (name == "l2norm") {
    LossStream s(name, Builtin::kL2Norm, StreamKind::kFixed, d, domain);
    s.w0_ = w0;
    s.g2_ = 1.0;
    s.comparator_hint_ = w0;
    s.params_ = std::move(params);
    s.init_oracle();
    return s;
  }
  if (name == "linear") {
    LossStream s(name, Builtin::kLinear, StreamKind::kFixed, d, domain);
    s.a_ = a;
    s.g2_ = a.norm();
    if (domain.kind() == Domain::Kind::kL2Ball) {
      const double norm = a.norm();
      s.comparator_hint_ = norm > 0.0 ? Vec(-domain.radius() / norm * a) : domain.center();
    } else {
      int best = 0;
      for (int i = 1; i < d; ++i) {
        if (a[i] < a[best]) best = i;
      }
      Vec vertex = Vec::Zero(d);
      vertex[best] = 1.0;
      s.comparator_hint_ = vertex;
    }
    s.params_ = std::move(params);
    s.init_oracle();
    return s;
  }
  if (name == "shifted_l1norm") {
    LossStream s(name, Builtin::kShiftedL1Norm, StreamKind::kFixed, d, domain);
    s.w0_ = w0;
    s.g1_ = 1.0;
    s.g2_ = std::sqrt(static_cast<double>(d));
    s.comparator_hint_ = w0;
    s.params_ = std::move(params);
    s.init_oracle();
    return s;
  }
  if (name == "quadratic") {
    LossStream s(name, Builtin::kQuadratic, StreamKind::kStochasticIid, d, domain);
    s.w0_ = w0;
    s.noise_ = b;
    s.g2_ = max_distance_over_domain(domain, w0) + b;
    s.comparator_hint_ = w0;
    // F(w) = 0.5 ||w - w0||^2 + 0.5 E||nu||^2 with nu uniform in a radius-b
    // ball: E||nu||^2 = b^2 d/(d+2).
    s.min_f_ = 0.5 * b * b * static_cast<double>(d) / static_cast<double>(d + 2);
    s.params_ = std::move(params);
    s.init_oracle();
    return s;
  }
  if (name == "abs_regression") {
    LossStream s(name, Builtin::kAbsRegression, StreamKind::kStochasticIid, d, domain);
    s.w0_ = w0;
    s.noise_ = b;
    s.g2_ = 1.0;  // x_t on the unit sphere
    s.comparator_hint_ = w0;
    s.min_f_ = 0.5 * b;  // E|eps| for eps uniform in [-b, b]
    s.params_ = std::move(params);
    s.init_oracle();
    return s;
  }
  throw std::invalid_argument("builtin objective: unknown name '" + name + "'");
}

LossStream LossStream::fixed_custom(int d, Domain domain, double g2,
                                    TwoPointOracle::EvalFn eval) {
  if (!eval) throw std::invalid_argument("fixed_custom: eval required");
  LossStream s("custom", Builtin::kCustom, StreamKind::kFixed, d, std::move(domain));
  s.g2_ = g2;
  s.fixed_eval_ = std::move(eval);
  s.init_oracle();
  return s;
}

LossStream LossStream::oblivious(int d, Domain domain, double g2,
                                 std::function<double(std::int64_t, const Vec&)> eval,
                                 std::function<Vec(std::int64_t, const Vec&)> subgradient,
                                 std::optional<Vec> comparator_hint) {
  if (!eval) throw std::invalid_argument("oblivious: eval required");
  LossStream s("oblivious", Builtin::kCustom, StreamKind::kObliviousAdversary, d,
               std::move(domain));
  s.g2_ = g2;
  s.custom_eval_ = std::move(eval);
  s.custom_subgrad_ = std::move(subgradient);
  s.comparator_hint_ = std::move(comparator_hint);
  s.init_oracle();
  return s;
}

void LossStream::set_round(std::int64_t t) {
  current_round_ = t;
  switch (which_) {
    case Builtin::kQuadratic: {
      Rng rng = make_rng(mix_seed(mix_seed(params_.seed, kRoundTag), static_cast<std::uint64_t>(t)));
      xi_center_ = w0_ + uniform_ball_point(d_, noise_, rng);
      return;
    }
    case Builtin::kAbsRegression: {
      Rng rng = make_rng(mix_seed(mix_seed(params_.seed, kRoundTag), static_cast<std::uint64_t>(t)));
      xi_x_ = sample_unit_sphere(d_, rng).coords();
      std::uniform_real_distribution<double> unif(-noise_, noise_);
      xi_y_ = xi_x_.dot(w0_) + (noise_ > 0.0 ? unif(rng) : 0.0);
      return;
    }
    default:
      return;  // fixed objectives and custom streams carry no round state here
  }
}

double LossStream::eval_current(const Vec& w) const {
  switch (which_) {
    case Builtin::kL2Norm:
      return (w - w0_).norm();
    case Builtin::kLinear:
      return a_.dot(w);
    case Builtin::kShiftedL1Norm:
      return (w - w0_).lpNorm<1>();
    case Builtin::kQuadratic:
      return 0.5 * (w - xi_center_).squaredNorm();
    case Builtin::kAbsRegression:
      return std::abs(xi_x_.dot(w) - xi_y_);
    case Builtin::kCustom:
      if (fixed_eval_) return fixed_eval_(w);
      return custom_eval_(current_round_, w);
  }
  throw std::logic_error("LossStream: unknown builtin");
}

TwoPointOracle& LossStream::oracle_for_round(std::int64_t t) {
  oracle_->round_reset(t);
  return *oracle_;
}

MonteCarloValue LossStream::population_value(const Vec& w, std::int64_t n_samples,
                                             std::uint64_t seed) const {
  if (kind_ != StreamKind::kStochasticIid) {
    throw std::invalid_argument("population_value: stream is not stochastic");
  }
  if (n_samples < 2) throw std::invalid_argument("population_value: n_samples must be >= 2");
  Rng rng = make_rng(mix_seed(seed, 0xF00Du));
  OnlineMoments acc;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    double v = 0.0;
    switch (which_) {
      case Builtin::kQuadratic: {
        const Vec nu = uniform_ball_point(d_, noise_, rng);
        v = 0.5 * (w - w0_ - nu).squaredNorm();
        break;
      }
      case Builtin::kAbsRegression: {
        const Vec x = sample_unit_sphere(d_, rng).coords();
        std::uniform_real_distribution<double> unif(-noise_, noise_);
        const double y = x.dot(w0_) + (noise_ > 0.0 ? unif(rng) : 0.0);
        v = std::abs(x.dot(w) - y);
        break;
      }
      default:
        throw std::logic_error("population_value: unsupported objective");
    }
    acc.add(v);
  }
  return MonteCarloValue{acc.mean(), acc.std_error()};
}

Vec LossStream::subgradient_at(std::int64_t t, const Vec& w) {
  set_round(t);
  switch (which_) {
    case Builtin::kL2Norm: {
      const Vec diff = w - w0_;
      const double norm = diff.norm();
      return norm > 0.0 ? Vec(diff / norm) : Vec(Vec::Zero(d_));
    }
    case Builtin::kLinear:
      return a_;
    case Builtin::kShiftedL1Norm: {
      Vec g(d_);
      for (int i = 0; i < d_; ++i) g[i] = sign0(w[i] - w0_[i]);
      return g;
    }
    case Builtin::kQuadratic:
      return w - xi_center_;
    case Builtin::kAbsRegression:
      return sign0(xi_x_.dot(w) - xi_y_) * xi_x_;
    case Builtin::kCustom:
      if (custom_subgrad_) return custom_subgrad_(t, w);
      throw std::logic_error("subgradient_at: no subgradient for custom stream");
  }
  throw std::logic_error("subgradient_at: unknown builtin");
}

std::function<double(const Vec&)> LossStream::eval_fn(std::int64_t t) {
  set_round(t);
  switch (which_) {
    case Builtin::kL2Norm: {
      Vec w0 = w0_;
      return [w0](const Vec& w) { return (w - w0).norm(); };
    }
    case Builtin::kLinear: {
      Vec a = a_;
      return [a](const Vec& w) { return a.dot(w); };
    }
    case Builtin::kShiftedL1Norm: {
      Vec w0 = w0_;
      return [w0](const Vec& w) { return (w - w0).lpNorm<1>(); };
    }
    case Builtin::kQuadratic: {
      Vec center = xi_center_;
      return [center](const Vec& w) { return 0.5 * (w - center).squaredNorm(); };
    }
    case Builtin::kAbsRegression: {
      Vec x = xi_x_;
      const double y = xi_y_;
      return [x, y](const Vec& w) { return std::abs(x.dot(w) - y); };
    }
    case Builtin::kCustom: {
      if (custom_eval_) {
        auto eval = custom_eval_;
        return [eval, t](const Vec& w) { return eval(t, w); };
      }
      return fixed_eval_;
    }
  }
  throw std::logic_error("eval_fn: unknown builtin");
}

std::function<Vec(const Vec&)> LossStream::subgradient_fn(std::int64_t t) {
  set_round(t);
  switch (which_) {
    case Builtin::kL2Norm: {
      Vec w0 = w0_;
      return [w0](const Vec& w) {
        const Vec diff = w - w0;
        const double norm = diff.norm();
        return norm > 0.0 ? Vec(diff / norm) : Vec(Vec::Zero(w.size()));
      };
    }
    case Builtin::kLinear: {
      Vec a = a_;
      return [a](const Vec&) { return a; };
    }
    case Builtin::kShiftedL1Norm: {
      Vec w0 = w0_;
      return [w0](const Vec& w) {
        Vec g(w.size());
        for (int i = 0; i < w.size(); ++i) g[i] = sign0(w[i] - w0[i]);
        return g;
      };
    }
    case Builtin::kQuadratic: {
      Vec center = xi_center_;
      return [center](const Vec& w) { return Vec(w - center); };
    }
    case Builtin::kAbsRegression: {
      Vec x = xi_x_;
      const double y = xi_y_;
      return [x, y](const Vec& w) { return Vec(sign0(x.dot(w) - y) * x); };
    }
    case Builtin::kCustom: {
      if (custom_subgrad_) {
        auto sg = custom_subgrad_;
        return [sg, t](const Vec& w) { return sg(t, w); };
      }
      throw std::logic_error("subgradient_fn: no subgradient for custom stream");
    }
  }
  throw std::logic_error("subgradient_fn: unknown builtin");
}

LossStream LossStream::replay_copy() const {
  switch (which_) {
    case Builtin::kCustom:
      if (kind_ == StreamKind::kFixed) {
        return fixed_custom(d_, domain_, g2_, fixed_eval_);
      }
      return oblivious(d_, domain_, g2_, custom_eval_, custom_subgrad_, comparator_hint_);
    default:
      return builtin(name_, d_, params_);
  }
}

}  // namespace zo
