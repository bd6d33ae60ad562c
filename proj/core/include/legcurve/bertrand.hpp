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

#ifndef LEGCURVE_BERTRAND_HPP_
#define LEGCURVE_BERTRAND_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "legcurve/legendre.hpp"
#include "legcurve/plane.hpp"
#include "legcurve/residual.hpp"

namespace legcurve {

enum class SolveMode { kOde, kAlgebraic, kAuto };

std::string_view to_string(SolveMode mode);
SolveMode solve_mode_from_name(std::string_view name);

/// Angle fields and scale datum of a mate construction.
///
/// The direction of translation is v = cos(theta) nu + sin(theta) mu and the
/// mate's frame satisfies v = cos(tau) nu_bar + sin(tau) mu_bar.
struct MateConfig {
  AngleFn theta = SmoothFn::constant(0.0);
  AngleFn tau = SmoothFn::constant(0.0);
  /// lambda(t_start); unused in algebraic mode.
  double lambda0 = 0.0;
  SolveMode mode = SolveMode::kAuto;
};

/// ode when cos(tau) != 0 on the whole grid, algebraic when cos(tau) == 0
/// on the whole grid (|cos tau| <= tol::kAngle). Mixed patterns and an
/// explicit mode that contradicts the grid throw kUnresolvableMode.
SolveMode resolve_mode(const MateConfig& config, std::span<const double> grid);

/// Scale function lambda on the grid.
struct LambdaSolution {
  std::vector<double> grid;
  std::vector<double> lambda;
  std::vector<double> lambda_d1;
  /// |(beta sin th + lambda')cos tau - (beta cos th + lambda(th' + ell)) sin tau|
  /// with lambda' taken from 4th-order differences of `lambda`.
  std::vector<double> residual;
  double tolerance = 0.0;
  SolveMode mode = SolveMode::kOde;
  /// Continuation of lambda to t_end (the closing node of periodic grids).
  double lambda_end = 0.0;
  /// True when the interval is periodic and lambda, theta and tau all
  /// return to their initial values at t_end.
  bool closes = false;
  bool lambda0_ignored = false;
  /// Advisory: max |lambda| <= 1e-10 * length scale.
  bool vanishing = false;
  /// RK4 substeps per grid interval (2 after a step-halving retry).
  int substeps = 1;

  double max_residual() const;
};

/// Solve the mate condition for lambda.
///
/// ode: classical RK4 on the grid step for
///   lambda' = tan(tau) (beta cos th + lambda (th' + ell)) - beta sin th,
/// lambda(t_start) = lambda0, with one step-halving retry when the residual
/// exceeds ode_tol. algebraic (cos tau == 0):
///   lambda = -beta cos th / (th' + ell).
/// Errors: kUnresolvableMode, kDivisionBlowup (th' + ell vanishes in
/// algebraic mode; the message lists the inflection points),
/// kResidualExceeded.
LambdaSolution solve_lambda(const CurvaturePair& cp, const MateConfig& config,
                            double length_scale = 1.0);

/// A Legendre curve, one of its mates and the data connecting them.
struct MatePair {
  LegendreCurve source;
  LegendreCurve mate;
  MateConfig config;
  LambdaSolution lambda;
  /// Mate curvature from the closed-form expressions in (ell, beta, lambda).
  CurvaturePair mate_curvature;
  /// Translation direction v at the grid nodes.
  std::vector<Vec2> direction;
  /// max |v - w_bar| over the grid.
  ResidualReport direction_coincidence;
  double mate_tol = 0.0;
};

/// gamma_bar = gamma + lambda v, nu_bar = cos(th - tau) nu + sin(th - tau) mu,
/// built on the source grid. The mate is a sampled Legendre curve.
/// Errors: kResidualExceeded when `lam` does not solve the condition.
MatePair build_mate(const LegendreCurve& lc, const MateConfig& config,
                    const LambdaSolution& lam);
/// Convenience: curvature, solve and build.
MatePair build_mate(const LegendreCurve& lc, const MateConfig& config);

/// ell_bar = th' - tau' + ell,
/// beta_bar = (beta cos th + lambda(th' + ell)) cos tau
///          + (beta sin th + lambda') sin tau.
CurvaturePair mate_curvature(const CurvaturePair& cp, const MateConfig& config,
                             const LambdaSolution& lam);

/// Discrepancy between `mp.mate_curvature` and the curvature measured
/// directly on the constructed mate, relative to max(1, sup|reference|).
ResidualReport verify_mate_curvature(const MatePair& mp);

struct ParallelOp {
  double distance = 0.0;
};
struct EvoluteOp {};
struct InvoluteOp {
  double lambda0 = 0.0;
};
struct EvolutoidOp {
  double theta = 0.0;
};
struct InvolutoidOp {
  double tau = 0.0;
  double lambda0 = 0.0;
};
/// N[theta]: translation along cos th nu + sin th mu, normal -mu.
struct NOp {
  double theta = 0.0;
  double lambda0 = 0.0;
};
/// T[tau]: translation along cos tau mu - sin tau nu, normal mu.
struct TOp {
  double tau = 0.0;
  double lambda0 = 0.0;
};

using SpecialOperator = std::variant<ParallelOp, EvoluteOp, InvoluteOp,
                                     EvolutoidOp, InvolutoidOp, NOp, TOp>;

std::string operator_name(const SpecialOperator& op);
/// The (theta, tau, lambda0, mode) instantiation of a named operator.
MateConfig operator_config(const SpecialOperator& op);

/// Build the named associated curve. Errors: kDivisionBlowup when an
/// algebraic case meets a zero of ell; solver errors otherwise.
MatePair special_operator(const LegendreCurve& lc, const SpecialOperator& op);

/// Mate normal written directly in the source frame for a named operator
/// (parallel: nu, evolute/evolutoid: sin th nu - cos th mu,
/// involute/involutoid: sin tau nu + cos tau mu, N: -mu, T: mu).
Vec2 operator_normal(const SpecialOperator& op, const UnitVec2& nu);

/// Mate curvature written with the per-operator closed forms rather than
/// the general expression; used as an independent cross-check.
CurvaturePair operator_curvature(const CurvaturePair& cp,
                                 const SpecialOperator& op,
                                 const LambdaSolution& lam);

/// The reverse construction from the mate: angles swapped, lambda negated.
/// The returned pair's mate is (gamma, nu) up to rounding; its lambda
/// residual is evaluated against the mate's curvature.
MatePair inverse_mate(const MatePair& mp);

/// Pointwise distance between two curves sampled on the same grid.
struct CurveDiscrepancy {
  double position = 0.0;
  double normal = 0.0;
};
CurveDiscrepancy compare_curves(const LegendreCurve& a, const LegendreCurve& b);

/// Result of composing two chained mate constructions whose scale functions
/// cancel.
struct IdentityReport {
  double max_lambda_sum = 0.0;
  double position_discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

using Composition = std::variant<MatePair, IdentityReport>;

/// Chain (g1, n1) -> (g2, n2) -> (g3, n3). When lambda1 + lambda2 vanishes
/// (<= 1e-10 * diameter) the result is an IdentityReport comparing g1 with
/// g3; otherwise the composite mate with lambda1 + lambda2.
/// Errors: kChainMismatch when mp12's mate is not mp23's source or the
/// translation directions differ.
Composition compose_mates(const MatePair& mp12, const MatePair& mp23);

/// Direct test whether (a, b) are mates for the given angle fields:
/// u = cos th nu_a + sin th mu_a must equal cos tau nu_b + sin tau mu_b and
/// gamma_b - gamma_a must be parallel to u.
struct MateRelation {
  std::vector<double> lambda;
  double direction_residual = 0.0;
  double position_residual = 0.0;
  double tolerance = 0.0;
  bool related = false;
};
MateRelation check_mate_relation(const LegendreCurve& a, const LegendreCurve& b,
                                 const AngleFn& theta, const AngleFn& tau);

}  // namespace legcurve

#endif  // LEGCURVE_BERTRAND_HPP_
