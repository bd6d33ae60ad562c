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

#ifndef LEGCURVE_TOLERANCES_HPP_
#define LEGCURVE_TOLERANCES_HPP_

#include <algorithm>

// Numerical thresholds shared by every module. Scale-aware thresholds are
// exposed as functions of the relevant scale.
namespace legcurve::tol {

/// Admissible | |v| - 1 | for unit vectors.
inline constexpr double kUnit = 1e-9;
/// Drift below this is left alone; above it (up to kUnit) is renormalised.
inline constexpr double kRenormalize = 1e-12;
/// Relative tolerance for analytic-vs-difference derivative checks.
inline constexpr double kFd = 1e-5;
/// |cos tau| at or below this counts as zero when resolving the solve mode.
inline constexpr double kAngle = 1e-6;
/// Relative tolerance between independently computed curvatures.
inline constexpr double kCross = 1e-6;
/// Relative "= 0" level for the singular-point tests.
inline constexpr double kSingRel = 1e-7;
/// Ratio between the "!= 0" and "= 0" levels.
inline constexpr double kNonzeroFactor = 1e2;
/// Largest |lambda| (relative to diameter) still considered "lambda == 0".
inline constexpr double kLambdaVanish = 1e-10;

/// Singular-speed threshold, scaled by diameter over parameter length.
inline double reg_tol(double diameter, double interval_length) {
  return 1e-7 * (diameter / interval_length);
}

inline double geom_tol(double diameter) { return 1e-9 * diameter; }

/// Tangency tolerance |gamma' . nu|.
inline double leg_tol(double speed_scale, bool sampled) {
  return (sampled ? 1e-4 : 1e-8) * speed_scale;
}

inline double sing_tol(double beta_scale) { return kSingRel * beta_scale; }
inline double nz_tol(double beta_scale) {
  return kNonzeroFactor * sing_tol(beta_scale);
}

inline double ode_tol(double beta_max) {
  return 1e-7 * std::max(beta_max, 1.0);
}

inline double mate_tol(double diameter, bool sampled) {
  return (sampled ? 1e-3 : 1e-6) * diameter;
}

}  // namespace legcurve::tol

#endif  // LEGCURVE_TOLERANCES_HPP_
