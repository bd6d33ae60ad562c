// Copyright 2026 The legcurve Authors
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

#ifndef LEGCURVE_TESTS_FIXTURES_HPP_
#define LEGCURVE_TESTS_FIXTURES_HPP_

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "legcurve/bertrand.hpp"
#include "legcurve/curve_model.hpp"
#include "legcurve/legendre.hpp"

namespace legcurve::testing {

inline constexpr double kPi = std::numbers::pi;

inline BuiltinSpec circle_spec(double r = 1.0, int n = 1024, double w = 1.0) {
  BuiltinSpec s{BuiltinKind::kCircle, {{"r", r}, {"w", w}}, {}};
  s.interval = BuiltinSpec::default_interval(s.kind, n, w);
  return s;
}

inline BuiltinSpec astroid_spec(int n = 1024) {
  BuiltinSpec s{BuiltinKind::kAstroid, {}, {}};
  s.interval = BuiltinSpec::default_interval(s.kind, n);
  return s;
}

inline BuiltinSpec ellipse_spec(double a = 2.0, double b = 1.0, int n = 1024) {
  BuiltinSpec s{BuiltinKind::kEllipse, {{"a", a}, {"b", b}}, {}};
  s.interval = BuiltinSpec::default_interval(s.kind, n);
  return s;
}

inline BuiltinSpec line_spec(double t0 = -1.0, double t1 = 1.0, int n = 256) {
  return {BuiltinKind::kLine, {}, {t0, t1, n, false}};
}

inline LegendreCurve circle(double r = 1.0, int n = 1024) {
  return builtin_legendre(circle_spec(r, n));
}

inline LegendreCurve astroid(int n = 1024) { return builtin_legendre(astroid_spec(n)); }

inline double max_abs_diff(std::span<const double> a, auto&& f, std::span<const double> grid) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - f(grid[i])));
  return m;
}

/// Closed-form Legendre curve built from a support function.
///
/// phi(t) = t + eps sin t, nu = (cos phi, sin phi), mu = J(nu) and
/// gamma = p(phi) nu + p'(phi) mu with p a trigonometric polynomial of
/// degree 3. Then gamma' = (p + p'')(phi) phi' mu, so
///   ell = phi',  beta = (p + p'')(phi) phi'.
/// Zeros of p + p'' are singular points of gamma.
struct Hedgehog {
  double eps = 0.0;
  double a0 = 1.0;
  std::array<double, 3> a{};  // cos k phi, k = 1..3
  std::array<double, 3> b{};  // sin k phi

  // k-th derivative of p at phi.
  double p(double phi, int order) const {
    double v = order == 0 ? a0 : 0.0;
    for (int k = 1; k <= 3; ++k) {
      const double c = std::cos(k * phi), s = std::sin(k * phi);
      // d^m/dphi^m of (a cos + b sin) cycles with period 4.
      double term = 0.0;
      switch (order % 4) {
        case 0: term = a[k - 1] * c + b[k - 1] * s; break;
        case 1: term = -a[k - 1] * s + b[k - 1] * c; break;
        case 2: term = -a[k - 1] * c - b[k - 1] * s; break;
        case 3: term = a[k - 1] * s - b[k - 1] * c; break;
      }
      v += std::pow(static_cast<double>(k), order) * term;
    }
    return v;
  }
  double phi(double t) const { return t + eps * std::sin(t); }
  double phi_d(double t, int order) const {
    switch (order) {
      case 1: return 1.0 + eps * std::cos(t);
      case 2: return -eps * std::sin(t);
      default: return -eps * std::cos(t);
    }
  }
  double q(double f, int order) const { return p(f, order) + p(f, order + 2); }

  double ell(double t) const { return phi_d(t, 1); }
  double beta(double t) const { return q(phi(t), 0) * phi_d(t, 1); }

  LegendreCurve build(int n = 512) const {
    const Hedgehog h = *this;
    auto frame = [](double f) {
      return std::pair{Vec2(std::cos(f), std::sin(f)), Vec2(-std::sin(f), std::cos(f))};
    };
    CurveModel::Jets jets = {
        [h, frame](double t) {
          const double f = h.phi(t);
          auto [nu, mu] = frame(f);
          return h.p(f, 0) * nu + h.p(f, 1) * mu;
        },
        [h, frame](double t) {
          const double f = h.phi(t);
          auto [nu, mu] = frame(f);
          return (h.q(f, 0) * h.phi_d(t, 1)) * mu;
        },
        [h, frame](double t) {
          const double f = h.phi(t);
          auto [nu, mu] = frame(f);
          const Vec2 g1 = h.q(f, 0) * mu;
          const Vec2 g2 = h.q(f, 1) * mu - h.q(f, 0) * nu;
          const double d1 = h.phi_d(t, 1);
          return g2 * (d1 * d1) + g1 * h.phi_d(t, 2);
        },
        [h, frame](double t) {
          const double f = h.phi(t);
          auto [nu, mu] = frame(f);
          const Vec2 g1 = h.q(f, 0) * mu;
          const Vec2 g2 = h.q(f, 1) * mu - h.q(f, 0) * nu;
          const Vec2 g3 = (h.q(f, 2) - h.q(f, 0)) * mu - 2.0 * h.q(f, 1) * nu;
          const double d1 = h.phi_d(t, 1), d2 = h.phi_d(t, 2), d3 = h.phi_d(t, 3);
          return g3 * (d1 * d1 * d1) + g2 * (3.0 * d1 * d2) + g1 * d3;
        }};
    const ParamInterval iv{0.0, 2.0 * kPi, n, true};
    NormalField field = NormalField::analytic(
        [h](double t) { return UnitVec2::from_angle(h.phi(t)); },
        [h, frame](double t) { return h.phi_d(t, 1) * frame(h.phi(t)).second; },
        [h, frame](double t) {
          auto [nu, mu] = frame(h.phi(t));
          const double d1 = h.phi_d(t, 1);
          return h.phi_d(t, 2) * mu - (d1 * d1) * nu;
        });
    return LegendreCurve(CurveModel::analytic(iv, std::move(jets)), std::move(field));
  }

  /// Random fixture. With `singular` set, a0 is small so p + p'' changes
  /// sign; otherwise p + p'' >= 0.45 and beta >= 0.27.
  static Hedgehog random(std::mt19937_64& rng, bool singular) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Hedgehog h;
    h.eps = 0.4 * u(rng);
    const double amp = singular ? 0.3 : 0.1;
    for (int k = 0; k < 3; ++k) {
      h.a[k] = amp * u(rng);
      h.b[k] = amp * u(rng);
    }
    h.a0 = singular ? 0.1 * u(rng) : 2.5 + 0.5 * u(rng);
    return h;
  }
};

}  // namespace legcurve::testing

#endif  // LEGCURVE_TESTS_FIXTURES_HPP_
