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

#include "legcurve/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "legcurve/error.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kSingularPoint: return "singular point";
    case ErrorCode::kNotLegendre: return "not a Legendre curve";
    case ErrorCode::kUnresolvableMode: return "unresolvable solve mode";
    case ErrorCode::kDivisionBlowup: return "division blow-up";
    case ErrorCode::kResidualExceeded: return "residual exceeded";
    case ErrorCode::kChainMismatch: return "chain mismatch";
    case ErrorCode::kIo: return "i/o";
  }
  return "unknown";
}

Vec2::Vec2(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    std::ostringstream os;
    os << "non-finite vector component (" << x << ", " << y << ")";
    fail(ErrorCode::kInvalidInput, os.str());
  }
}

UnitVec2 UnitVec2::from(const Vec2& v) {
  const double n = v.norm();
  const double drift = std::abs(n - 1.0);
  if (drift > tol::kUnit) {
    std::ostringstream os;
    os << "vector of norm " << n << " is not a unit vector";
    fail(ErrorCode::kInvalidInput, os.str());
  }
  if (drift > tol::kRenormalize) return UnitVec2(v / n);
  return UnitVec2(v);
}

UnitVec2 UnitVec2::normalize(const Vec2& v) {
  const double n = v.norm();
  if (!(n > 0.0)) fail(ErrorCode::kInvalidInput, "cannot normalise zero vector");
  return UnitVec2(v / n);
}

UnitVec2 UnitVec2::from_angle(double phi) {
  return UnitVec2(Vec2(std::cos(phi), std::sin(phi)));
}

UnitVec2 frame_from_angle(const UnitVec2& nu, double theta) {
  const Vec2 mu = rotate_j(nu.vec());
  return UnitVec2::from(std::cos(theta) * nu.vec() + std::sin(theta) * mu);
}

SmoothFn::SmoothFn(Fn eval, Fn deriv)
    : eval_(std::move(eval)), deriv_(std::move(deriv)) {
  if (!eval_ || !deriv_) fail(ErrorCode::kInvalidInput, "empty function");
}

SmoothFn SmoothFn::constant(double value) {
  SmoothFn f([value](double) { return value; }, [](double) { return 0.0; });
  f.constant_ = value;
  return f;
}

SmoothFn SmoothFn::linear(double value0, double slope, double t0) {
  return SmoothFn([=](double t) { return value0 + slope * (t - t0); },
                  [slope](double) { return slope; });
}

double SmoothFn::consistency_error(std::span<const double> grid) const {
  if (constant_) return 0.0;
  double worst = 0.0;
  for (double t : grid) {
    const double h =
        std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(t));
    const double fd = (eval_(t + h) - eval_(t - h)) / (2.0 * h);
    const double d = deriv_(t);
    worst = std::max(worst, std::abs(fd - d) / std::max(1.0, std::abs(d)));
  }
  return worst;
}

}  // namespace legcurve
