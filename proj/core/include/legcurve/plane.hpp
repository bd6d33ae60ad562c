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

#ifndef LEGCURVE_PLANE_HPP_
#define LEGCURVE_PLANE_HPP_

#include <cmath>
#include <functional>
#include <optional>
#include <span>

namespace legcurve {

/// A point or direction in the Euclidean plane. Components are always finite;
/// the constructor rejects NaN and infinity.
class Vec2 {
 public:
  constexpr Vec2() = default;
  Vec2(double x, double y);

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  double norm() const noexcept { return std::hypot(x_, y_); }
  constexpr double squared_norm() const noexcept { return x_ * x_ + y_ * y_; }

  Vec2 operator-() const { return {-x_, -y_}; }
  Vec2& operator+=(const Vec2& o) { return *this = Vec2(x_ + o.x_, y_ + o.y_); }
  Vec2& operator-=(const Vec2& o) { return *this = Vec2(x_ - o.x_, y_ - o.y_); }
  Vec2& operator*=(double s) { return *this = Vec2(x_ * s, y_ * s); }

  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend Vec2 operator/(const Vec2& a, double s) { return {a.x_ / s, a.y_ / s}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Anti-clockwise rotation by pi/2: (x, y) -> (-y, x).
inline Vec2 rotate_j(const Vec2& a) { return {-a.y(), a.x()}; }

inline double dot(const Vec2& a, const Vec2& b) {
  return a.x() * b.x() + a.y() * b.y();
}

/// det(a, b) = a.x b.y - a.y b.x = dot(J(a), b) up to sign convention.
inline double det(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// A direction on the unit circle. Construction goes through `from`, which
/// renormalises small drift and rejects anything beyond the unit tolerance.
class UnitVec2 {
 public:
  /// Accepts `v` when | |v| - 1 | <= tol::kUnit. Drift above 1e-12 is removed
  /// by dividing by the norm.
  static UnitVec2 from(const Vec2& v);
  /// Direction of an arbitrary nonzero vector.
  static UnitVec2 normalize(const Vec2& v);
  static UnitVec2 from_angle(double phi);

  const Vec2& vec() const noexcept { return dir_; }
  operator const Vec2&() const noexcept { return dir_; }  // NOLINT
  double x() const noexcept { return dir_.x(); }
  double y() const noexcept { return dir_.y(); }

  UnitVec2 operator-() const { return UnitVec2(-dir_); }

 private:
  explicit UnitVec2(const Vec2& v) : dir_(v) {}
  Vec2 dir_{1.0, 0.0};
};

inline UnitVec2 rotate_j(const UnitVec2& a) {
  return UnitVec2::from(rotate_j(a.vec()));
}

/// cos(theta) nu + sin(theta) J(nu).
UnitVec2 frame_from_angle(const UnitVec2& nu, double theta);

/// A smooth scalar function of the curve parameter together with its first
/// derivative. Used for the angle fields theta, tau and for prescribed scale
/// functions. Angles are plain radians and are never wrapped.
class SmoothFn {
 public:
  using Fn = std::function<double(double)>;

  SmoothFn(Fn eval, Fn deriv);
  static SmoothFn constant(double value);
  /// value0 + slope * (t - t0)
  static SmoothFn linear(double value0, double slope, double t0 = 0.0);

  double operator()(double t) const { return eval_(t); }
  double value(double t) const { return eval_(t); }
  double deriv(double t) const { return deriv_(t); }

  /// Set for functions built with `constant`.
  std::optional<double> constant_value() const { return constant_; }
  bool is_constant() const { return constant_.has_value(); }

  /// Largest mismatch between `deriv` and a central difference of `value`
  /// over `grid`, relative to max(1, |deriv|).
  double consistency_error(std::span<const double> grid) const;

 private:
  Fn eval_;
  Fn deriv_;
  std::optional<double> constant_;
};

using AngleFn = SmoothFn;

}  // namespace legcurve

#endif  // LEGCURVE_PLANE_HPP_
