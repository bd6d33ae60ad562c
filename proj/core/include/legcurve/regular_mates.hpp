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

#ifndef LEGCURVE_REGULAR_MATES_HPP_
#define LEGCURVE_REGULAR_MATES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "legcurve/bertrand.hpp"
#include "legcurve/curve_model.hpp"
#include "legcurve/plane.hpp"
#include "legcurve/residual.hpp"

namespace legcurve {

/// Mate conditions for regular curves, evaluated in arc length s.
///
///   cond1 = (cos th + lambda') sin tau - (sin th - lambda(th' + kappa)) cos tau
///   cond2 = (cos th + lambda') cos tau + (sin th - lambda(th' + kappa)) sin tau
///
/// is_mate iff max |cond1| <= ode_tol and min |cond2| > reg_tol. When the
/// pair are mates, mate_curvature holds (th' - tau' + kappa) / |cond2|.
struct RegularBertrandReport {
  std::vector<double> grid;
  std::vector<double> kappa;
  std::vector<double> cond1_residual;
  std::vector<double> cond2_value;
  std::vector<double> mate_curvature;
  double cond1_tolerance = 0.0;
  double reg_tol = 0.0;
  bool is_mate = false;

  double max_cond1() const;
  double min_abs_cond2() const;
};

/// `theta`, `tau` and `lambda` are functions of the arc length of `c`
/// (s = 0 at t_start). The curve is reparametrised by arc length first.
/// Errors: kSingularPoint.
RegularBertrandReport check_regular_bertrand(const CurveModel& c,
                                             const SmoothFn& theta,
                                             const SmoothFn& tau,
                                             const SmoothFn& lambda);

/// Regular-mate data recovered from a Legendre mate pair on a stretch where
/// both curves are regular. The regular angles fold the sign of beta:
///   v     = cos th_r t + sin th_r n,       th_r  = th - pi/2 (+ pi if beta < 0)
///   w_bar = cos tau_r t_bar + sin tau_r n_bar, tau_r = tau - pi/2 (+ pi if beta_bar < 0)
/// and the regular conditions are evaluated at each node with
/// d/ds = |gamma'|^-1 d/dt.
struct RegularMateData {
  std::vector<double> grid;
  std::vector<double> theta_reg;
  std::vector<double> tau_reg;
  std::vector<int> sign_beta;
  std::vector<int> sign_beta_bar;
  std::vector<double> cond1_residual;
  std::vector<double> cond2_value;
  /// Mate curvature from the regular formula.
  std::vector<double> kappa_bar;
  /// Mate curvature measured as ell_bar / |beta_bar|.
  std::vector<double> kappa_bar_legendre;
  /// |v_regular - v| and |w_bar_regular - w_bar| at the nodes.
  ResidualReport direction_agreement;
  ResidualReport cond1;
  ResidualReport kappa_agreement;
  bool is_mate = false;
};

/// Errors: kSingularPoint if beta or beta_bar is near zero in the range.
RegularMateData regular_to_legendre_mates(
    const MatePair& mp,
    std::optional<std::pair<double, double>> range = std::nullopt);

}  // namespace legcurve

#endif  // LEGCURVE_REGULAR_MATES_HPP_
