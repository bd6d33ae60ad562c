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

#include "legcurve/regular_mates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "legcurve/error.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve {

double RegularBertrandReport::max_cond1() const {
  double m = 0.0;
  for (double x : cond1_residual) m = std::max(m, std::abs(x));
  return m;
}

double RegularBertrandReport::min_abs_cond2() const {
  double m = std::numeric_limits<double>::infinity();
  for (double x : cond2_value) m = std::min(m, std::abs(x));
  return m;
}

RegularBertrandReport check_regular_bertrand(const CurveModel& c, const SmoothFn& theta,
                                             const SmoothFn& tau, const SmoothFn& lambda) {
  const CurveModel arc = arclength_reparametrize(c);
  RegularBertrandReport r;
  r.grid = arc.interval().grid();
  r.reg_tol = arc.reg_tol();
  double scale = 1.0;
  for (double s : r.grid) {
    const double k = regular_curvature(arc, s);
    const double th = theta(s), ta = tau(s);
    const double lam = lambda(s), dlam = lambda.deriv(s);
    const double a = std::cos(th) + dlam;
    const double b = std::sin(th) - lam * (theta.deriv(s) + k);
    const double c1 = a * std::sin(ta) - b * std::cos(ta);
    const double c2 = a * std::cos(ta) + b * std::sin(ta);
    r.kappa.push_back(k);
    r.cond1_residual.push_back(std::abs(c1));
    r.cond2_value.push_back(c2);
    r.mate_curvature.push_back((theta.deriv(s) - tau.deriv(s) + k) / std::abs(c2));
    scale = std::max({scale, std::abs(dlam), std::abs(lam * (theta.deriv(s) + k))});
  }
  r.cond1_tolerance = tol::ode_tol(scale);
  r.is_mate = r.max_cond1() <= r.cond1_tolerance && r.min_abs_cond2() > r.reg_tol;
  if (!r.is_mate) r.mate_curvature.clear();
  return r;
}

RegularMateData regular_to_legendre_mates(
    const MatePair& mp, std::optional<std::pair<double, double>> range) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const CurvaturePair cp = legendre_curvature(mp.source);
  const CurvaturePair& mc = mp.mate_curvature;
  const double zt = tol::sing_tol(cp.max_abs_beta());
  const double zt_bar = tol::sing_tol(mc.max_abs_beta());
  const MateConfig& cfg = mp.config;

  RegularMateData out;
  double dir = 0.0, c1max = 0.0, kmax = 0.0, kdiff = 0.0, scale = 1.0;
  double c2min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const double t = cp.grid()[i];
    if (range && (t < range->first || t > range->second)) continue;
    const double b = cp.beta()[i], bb = mc.beta()[i];
    if (!(std::abs(b) > zt) || !(std::abs(bb) > zt_bar)) {
      std::ostringstream os;
      os << (std::abs(b) > zt ? "mate" : "source") << " is singular near t = " << t;
      fail(ErrorCode::kSingularPoint, os.str());
    }
    const int sb = b > 0 ? 1 : -1, sbb = bb > 0 ? 1 : -1;
    const double th = cfg.theta(t), ta = cfg.tau(t);
    const double th_r = th - kHalfPi + (sb < 0 ? std::numbers::pi : 0.0);
    const double ta_r = ta - kHalfPi + (sbb < 0 ? std::numbers::pi : 0.0);

    const UnitVec2 nu = mp.source.nu(t), mu = mp.source.mu(t);
    const UnitVec2 nb = mp.mate.nu(t), mb = mp.mate.mu(t);
    const Vec2 tan = sb * mu.vec(), nor = -sb * nu.vec();
    const Vec2 tan_b = sbb * mb.vec(), nor_b = -sbb * nb.vec();
    const Vec2 v_reg = std::cos(th_r) * tan + std::sin(th_r) * nor;
    const Vec2 w_reg = std::cos(ta_r) * tan_b + std::sin(ta_r) * nor_b;
    dir = std::max({dir, (v_reg - mp.direction[i]).norm(),
                    (w_reg - frame_from_angle(nb, ta).vec()).norm()});

    // d/ds = |beta|^-1 d/dt on the source.
    const double speed = std::abs(b);
    const double kappa = cp.ell()[i] / speed;
    const double dth = cfg.theta.deriv(t) / speed, dta = cfg.tau.deriv(t) / speed;
    const double lam = mp.lambda.lambda[i];
    const double dlam = mp.lambda.lambda_d1[i] / speed;
    const double a = std::cos(th_r) + dlam;
    const double bterm = std::sin(th_r) - lam * (dth + kappa);
    const double c1 = a * std::sin(ta_r) - bterm * std::cos(ta_r);
    const double c2 = a * std::cos(ta_r) + bterm * std::sin(ta_r);
    const double kb = (dth - dta + kappa) / std::abs(c2);
    const double kb_leg = mc.ell()[i] / std::abs(bb);

    out.grid.push_back(t);
    out.theta_reg.push_back(th_r);
    out.tau_reg.push_back(ta_r);
    out.sign_beta.push_back(sb);
    out.sign_beta_bar.push_back(sbb);
    out.cond1_residual.push_back(std::abs(c1));
    out.cond2_value.push_back(c2);
    out.kappa_bar.push_back(kb);
    out.kappa_bar_legendre.push_back(kb_leg);
    c1max = std::max(c1max, std::abs(c1));
    c2min = std::min(c2min, std::abs(c2));
    kmax = std::max(kmax, std::abs(kb_leg));
    kdiff = std::max(kdiff, std::abs(kb - kb_leg));
    scale = std::max({scale, std::abs(dlam), std::abs(lam * (dth + kappa))});
  }
  if (out.grid.empty()) fail(ErrorCode::kInvalidInput, "requested range holds no grid node");
  const std::size_t n = out.grid.size();
  out.direction_agreement = make_report(dir, mp.mate_tol, n);
  out.cond1 = make_report(c1max, tol::ode_tol(scale), n);
  out.kappa_agreement = make_report(kdiff, tol::kCross * std::max(1.0, kmax), n);
  out.is_mate = out.cond1.pass && out.direction_agreement.pass &&
                c2min > mp.source.gamma().reg_tol();
  return out;
}

}  // namespace legcurve
