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

#include "legcurve/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "legcurve/error.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// The grid a mate lives on: a periodic source yields a periodic mate only
// when lambda and the angle fields close up.
ParamInterval mate_interval(const ParamInterval& src, bool closes) {
  if (!src.periodic || closes) return src;
  return {src.t_start, src.node(src.n_samples - 1), src.n_samples, false};
}

// 4th-order difference derivative of lambda on the grid. For an open
// lambda on a periodic interval the closing value is appended so the
// stencils never wrap across the seam.
std::vector<double> lambda_derivative(const ParamInterval& iv,
                                      const std::vector<double>& lambda,
                                      double lambda_end, bool closes) {
  const double h = iv.step();
  if (iv.periodic && closes) return differentiate<double>(lambda, h, 1, true);
  if (iv.periodic) {
    std::vector<double> ext(lambda);
    ext.push_back(lambda_end);
    auto d = differentiate<double>(ext, h, 1, false);
    d.pop_back();
    return d;
  }
  return differentiate<double>(lambda, h, 1, false);
}

bool angle_closes(const AngleFn& f, const ParamInterval& iv) {
  const double d = std::remainder(f(iv.t_end) - f(iv.t_start), 2.0 * std::numbers::pi);
  return std::abs(d) <= 1e-12 * std::max(1.0, std::abs(f(iv.t_start)));
}

// Residual of the mate condition and its scale on the grid nodes.
void fill_residual(const ParamInterval& iv, std::span<const double> ell,
                   std::span<const double> beta, const MateConfig& cfg,
                   LambdaSolution& sol) {
  const std::vector<double> fd =
      lambda_derivative(iv, sol.lambda, sol.lambda_end, sol.closes);
  sol.residual.assign(sol.grid.size(), 0.0);
  double scale = 0.0;
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    const double t = sol.grid[i];
    const double th = cfg.theta(t), ta = cfg.tau(t);
    const double rot = cfg.theta.deriv(t) + ell[i];
    const double a = beta[i] * std::cos(th) + sol.lambda[i] * rot;
    const double b = beta[i] * std::sin(th) + fd[i];
    sol.residual[i] = std::abs(b * std::cos(ta) - a * std::sin(ta));
    scale = std::max({scale, std::abs(beta[i]), std::abs(sol.lambda[i] * rot),
                      std::abs(fd[i])});
  }
  sol.tolerance = tol::ode_tol(scale);
}

void finish(const ParamInterval& iv, const MateConfig& cfg, double length_scale,
            LambdaSolution& sol) {
  const double lmax = max_abs(sol.lambda);
  sol.closes = iv.periodic && angle_closes(cfg.theta, iv) && angle_closes(cfg.tau, iv) &&
               std::abs(sol.lambda_end - sol.lambda.front()) <=
                   1e-9 * std::max(length_scale, lmax);
  sol.vanishing = lmax <= tol::kLambdaVanish * length_scale;
}

std::vector<double> rk4(const CurvaturePair& cp, const MateConfig& cfg, int substeps,
                        double& lambda_end) {
  const ParamInterval& iv = cp.interval();
  auto rhs = [&](double t, double lam, double beta, double ell) {
    const double th = cfg.theta(t), ta = cfg.tau(t);
    return std::tan(ta) * (beta * std::cos(th) + lam * (cfg.theta.deriv(t) + ell)) -
           beta * std::sin(th);
  };
  auto rhs_at = [&](double t, double lam) {
    return rhs(t, lam, cp.beta_at(t), cp.ell_at(t));
  };
  const int n = static_cast<int>(cp.size());
  const int steps = iv.periodic ? n : n - 1;
  const double h = iv.step() / substeps;
  std::vector<double> out(n);
  double lam = cfg.lambda0;
  out[0] = lam;
  for (int i = 0; i < steps; ++i) {
    double t = iv.node(i);
    for (int s = 0; s < substeps; ++s) {
      const double k1 = s == 0 ? rhs(t, lam, cp.beta()[i], cp.ell()[i]) : rhs_at(t, lam);
      const double k2 = rhs_at(t + 0.5 * h, lam + 0.5 * h * k1);
      const double k3 = rhs_at(t + 0.5 * h, lam + 0.5 * h * k2);
      const double k4 = rhs_at(t + h, lam + h * k3);
      lam += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t = iv.node(i) + (s + 1) * h;
    }
    if (!std::isfinite(lam)) {
      std::ostringstream os;
      os << "lambda diverges near t = " << t;
      fail(ErrorCode::kResidualExceeded, os.str());
    }
    if (i + 1 < n) out[i + 1] = lam;
  }
  lambda_end = lam;
  return out;
}

}  // namespace

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kOde: return "ode";
    case SolveMode::kAlgebraic: return "algebraic";
    case SolveMode::kAuto: return "auto";
  }
  return "auto";
}

SolveMode solve_mode_from_name(std::string_view name) {
  if (name == "ode") return SolveMode::kOde;
  if (name == "algebraic") return SolveMode::kAlgebraic;
  if (name == "auto") return SolveMode::kAuto;
  fail(ErrorCode::kInvalidInput, "unknown mode '" + std::string(name) +
                                     "' (expected ode, algebraic or auto)");
}

SolveMode resolve_mode(const MateConfig& config, std::span<const double> grid) {
  std::size_t zero = 0;
  double first_zero = 0.0;
  for (double t : grid) {
    if (std::abs(std::cos(config.tau(t))) <= tol::kAngle) {
      if (zero == 0) first_zero = t;
      ++zero;
    }
  }
  SolveMode found;
  if (zero == grid.size()) {
    found = SolveMode::kAlgebraic;
  } else if (zero == 0) {
    found = SolveMode::kOde;
  } else {
    std::ostringstream os;
    os << "cos(tau) vanishes on part of the grid only (first zero at t = " << first_zero
       << "); neither the ode nor the algebraic form applies";
    fail(ErrorCode::kUnresolvableMode, os.str());
  }
  if (config.mode != SolveMode::kAuto && config.mode != found) {
    std::ostringstream os;
    os << "mode " << to_string(config.mode) << " requested but cos(tau) "
       << (found == SolveMode::kAlgebraic ? "vanishes" : "is nonzero")
       << " on the grid";
    fail(ErrorCode::kUnresolvableMode, os.str());
  }
  return found;
}

double LambdaSolution::max_residual() const { return max_abs(residual); }

LambdaSolution solve_lambda(const CurvaturePair& cp, const MateConfig& config,
                            double length_scale) {
  const ParamInterval& iv = cp.interval();
  LambdaSolution sol;
  sol.grid.assign(cp.grid().begin(), cp.grid().end());
  sol.mode = resolve_mode(config, sol.grid);
  const auto n = cp.size();

  if (sol.mode == SolveMode::kAlgebraic) {
    sol.lambda0_ignored = true;
    const double nz = tol::nz_tol(cp.max_abs_beta());
    std::vector<double> bad;
    sol.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = sol.grid[i];
      const double den = config.theta.deriv(t) + cp.ell()[i];
      if (!(std::abs(den) > nz)) {
        bad.push_back(t);
        continue;
      }
      sol.lambda[i] = -cp.beta()[i] * std::cos(config.theta(t)) / den;
    }
    if (!bad.empty()) {
      std::ostringstream os;
      os << "theta' + ell vanishes on " << bad.size()
         << " grid node(s), first at t = " << bad.front() << "; inflection points:";
      const auto infl = inflection_points(cp);
      if (infl.empty()) os << " none isolated";
      for (std::size_t k = 0; k < infl.size() && k < 8; ++k) os << ' ' << infl[k];
      if (infl.size() > 8) os << " ...";
      fail(ErrorCode::kDivisionBlowup, os.str());
    }
    const double te = iv.periodic ? iv.t_end : sol.grid.back();
    sol.lambda_end = iv.periodic ? -cp.beta_at(te) * std::cos(config.theta(te)) /
                                       (config.theta.deriv(te) + cp.ell_at(te))
                                 : sol.lambda.back();
    finish(iv, config, length_scale, sol);
    sol.lambda_d1 = lambda_derivative(iv, sol.lambda, sol.lambda_end, sol.closes);
    fill_residual(iv, cp.ell(), cp.beta(), config, sol);
    if (sol.max_residual() > sol.tolerance) {
      std::ostringstream os;
      os << "algebraic lambda leaves residual " << sol.max_residual();
      fail(ErrorCode::kResidualExceeded, os.str());
    }
    return sol;
  }

  for (int substeps : {1, 2}) {
    sol.substeps = substeps;
    sol.lambda = rk4(cp, config, substeps, sol.lambda_end);
    finish(iv, config, length_scale, sol);
    sol.lambda_d1.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = sol.grid[i];
      const double th = config.theta(t);
      sol.lambda_d1[i] =
          std::tan(config.tau(t)) *
              (cp.beta()[i] * std::cos(th) +
               sol.lambda[i] * (config.theta.deriv(t) + cp.ell()[i])) -
          cp.beta()[i] * std::sin(th);
    }
    fill_residual(iv, cp.ell(), cp.beta(), config, sol);
    if (sol.max_residual() <= sol.tolerance) return sol;
  }
  std::ostringstream os;
  os << "lambda residual " << sol.max_residual() << " exceeds " << sol.tolerance
     << " after step halving";
  fail(ErrorCode::kResidualExceeded, os.str());
}

CurvaturePair mate_curvature(const CurvaturePair& cp, const MateConfig& config,
                             const LambdaSolution& lam) {
  const auto n = cp.size();
  if (lam.lambda.size() != n) {
    fail(ErrorCode::kInvalidInput, "lambda does not match the curvature grid");
  }
  std::vector<double> ell(n), beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cp.grid()[i];
    const double th = config.theta(t), ta = config.tau(t);
    const double dth = config.theta.deriv(t);
    const double l = cp.ell()[i], b = cp.beta()[i];
    ell[i] = dth - config.tau.deriv(t) + l;
    beta[i] = (b * std::cos(th) + lam.lambda[i] * (dth + l)) * std::cos(ta) +
              (b * std::sin(th) + lam.lambda_d1[i]) * std::sin(ta);
  }
  return CurvaturePair::from_samples(mate_interval(cp.interval(), lam.closes),
                                     std::move(ell), std::move(beta));
}

namespace {

MatePair assemble(const LegendreCurve& lc, const CurvaturePair& cp,
                  const MateConfig& config, const LambdaSolution& lam) {
  const ParamInterval& src = lc.interval();
  if (lam.lambda.size() != static_cast<std::size_t>(src.n_samples)) {
    fail(ErrorCode::kInvalidInput, "lambda does not match the curve grid");
  }
  if (lam.max_residual() > lam.tolerance) {
    std::ostringstream os;
    os << "lambda does not solve the mate condition (residual " << lam.max_residual()
       << " > " << lam.tolerance << ")";
    fail(ErrorCode::kResidualExceeded, os.str());
  }
  const ParamInterval iv = mate_interval(src, lam.closes);
  const std::vector<double> grid = src.grid();
  std::vector<Vec2> pos, normals, dirs;
  pos.reserve(grid.size());
  normals.reserve(grid.size());
  dirs.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const UnitVec2 nu = lc.nu(t);
    const double th = config.theta(t), ta = config.tau(t);
    const Vec2 v = frame_from_angle(nu, th).vec();
    dirs.push_back(v);
    pos.push_back(lc.gamma().position(t) + lam.lambda[i] * v);
    normals.push_back(frame_from_angle(nu, th - ta).vec());
  }
  const double h = iv.step();
  std::array<std::vector<Vec2>, 4> jets;
  jets[1] = differentiate<Vec2>(pos, h, 1, iv.periodic);
  jets[2] = differentiate<Vec2>(pos, h, 2, iv.periodic);
  jets[3] = differentiate<Vec2>(pos, h, 3, iv.periodic);
  jets[0] = std::move(pos);
  LegendreCurve mate(CurveModel::from_node_jets(iv, std::move(jets)),
                     NormalField::from_nodes(iv, std::move(normals)),
                     lc.speed_scale());

  const double mtol = tol::mate_tol(lc.diameter(), lc.sampled());
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const Vec2 w = frame_from_angle(mate.nu(t), config.tau(t)).vec();
    worst = std::max(worst, (dirs[i] - w).norm());
  }
  MatePair mp{lc,
              std::move(mate),
              config,
              lam,
              mate_curvature(cp, config, lam),
              std::move(dirs),
              make_report(worst, mtol, grid.size()),
              mtol};
  return mp;
}

}  // namespace

MatePair build_mate(const LegendreCurve& lc, const MateConfig& config,
                    const LambdaSolution& lam) {
  const CurvaturePair cp = legendre_curvature(lc);
  if (lam.lambda.size() != cp.size()) {
    fail(ErrorCode::kInvalidInput, "lambda does not match the curve grid");
  }
  // The stored residual may be stale; re-evaluate against this curve.
  LambdaSolution checked = lam;
  fill_residual(cp.interval(), cp.ell(), cp.beta(), config, checked);
  return assemble(lc, cp, config, checked);
}

MatePair build_mate(const LegendreCurve& lc, const MateConfig& config) {
  const CurvaturePair cp = legendre_curvature(lc);
  const LambdaSolution lam = solve_lambda(cp, config, lc.diameter());
  return assemble(lc, cp, config, lam);
}

ResidualReport verify_mate_curvature(const MatePair& mp) {
  const CurvaturePair measured = legendre_curvature(mp.mate);
  const CurvaturePair& ref = mp.mate_curvature;
  const double ls = std::max(1.0, ref.max_abs_ell());
  const double bs = std::max(1.0, ref.max_abs_beta());
  double worst = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    worst = std::max(worst, std::abs(measured.ell()[i] - ref.ell()[i]) / ls);
    worst = std::max(worst, std::abs(measured.beta()[i] - ref.beta()[i]) / bs);
  }
  return make_report(worst, tol::kCross, ref.size());
}

// ------------------------------------------------------ named operators

std::string operator_name(const SpecialOperator& op) {
  struct {
    std::string operator()(const ParallelOp&) const { return "parallel"; }
    std::string operator()(const EvoluteOp&) const { return "evolute"; }
    std::string operator()(const InvoluteOp&) const { return "involute"; }
    std::string operator()(const EvolutoidOp&) const { return "evolutoid"; }
    std::string operator()(const InvolutoidOp&) const { return "involutoid"; }
    std::string operator()(const NOp&) const { return "nvolute"; }
    std::string operator()(const TOp&) const { return "tvolute"; }
  } v;
  return std::visit(v, op);
}

MateConfig operator_config(const SpecialOperator& op) {
  auto cfg = [](double theta, double tau, double lambda0, SolveMode mode) {
    return MateConfig{SmoothFn::constant(theta), SmoothFn::constant(tau), lambda0, mode};
  };
  struct {
    decltype(cfg)& make;
    MateConfig operator()(const ParallelOp& o) const {
      return make(0.0, 0.0, o.distance, SolveMode::kOde);
    }
    MateConfig operator()(const EvoluteOp&) const {
      return make(0.0, kHalfPi, 0.0, SolveMode::kAlgebraic);
    }
    MateConfig operator()(const InvoluteOp& o) const {
      return make(kHalfPi, 0.0, o.lambda0, SolveMode::kOde);
    }
    MateConfig operator()(const EvolutoidOp& o) const {
      return make(o.theta, kHalfPi, 0.0, SolveMode::kAlgebraic);
    }
    MateConfig operator()(const InvolutoidOp& o) const {
      return make(kHalfPi, o.tau, o.lambda0, SolveMode::kOde);
    }
    MateConfig operator()(const NOp& o) const {
      return make(o.theta, o.theta + kHalfPi, o.lambda0, SolveMode::kAuto);
    }
    MateConfig operator()(const TOp& o) const {
      return make(o.tau + kHalfPi, o.tau, o.lambda0, SolveMode::kAuto);
    }
  } v{cfg};
  return std::visit(v, op);
}

MatePair special_operator(const LegendreCurve& lc, const SpecialOperator& op) {
  try {
    return build_mate(lc, operator_config(op));
  } catch (const Error& e) {
    fail(e.code(), operator_name(op) + ": " + e.what());
  }
}

Vec2 operator_normal(const SpecialOperator& op, const UnitVec2& nu) {
  const Vec2 n = nu.vec();
  const Vec2 m = rotate_j(n);
  struct {
    const Vec2& n;
    const Vec2& m;
    Vec2 operator()(const ParallelOp&) const { return n; }
    Vec2 operator()(const EvoluteOp&) const { return -m; }
    Vec2 operator()(const InvoluteOp&) const { return m; }
    Vec2 operator()(const EvolutoidOp& o) const {
      return std::sin(o.theta) * n - std::cos(o.theta) * m;
    }
    Vec2 operator()(const InvolutoidOp& o) const {
      return std::sin(o.tau) * n + std::cos(o.tau) * m;
    }
    Vec2 operator()(const NOp&) const { return -m; }
    Vec2 operator()(const TOp&) const { return m; }
  } v{n, m};
  return std::visit(v, op);
}

CurvaturePair operator_curvature(const CurvaturePair& cp, const SpecialOperator& op,
                                 const LambdaSolution& lam) {
  const auto n = cp.size();
  if (lam.lambda.size() != n) {
    fail(ErrorCode::kInvalidInput, "lambda does not match the curvature grid");
  }
  std::vector<double> ell(cp.ell().begin(), cp.ell().end()), beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = cp.ell()[i], b = cp.beta()[i];
    const double la = lam.lambda[i], ld = lam.lambda_d1[i];
    struct {
      double l, b, la, ld;
      double operator()(const ParallelOp&) const { return b + la * l; }
      double operator()(const EvoluteOp&) const { return ld; }
      double operator()(const InvoluteOp&) const { return la * l; }
      double operator()(const EvolutoidOp& o) const { return b * std::sin(o.theta) + ld; }
      double operator()(const InvolutoidOp& o) const {
        return la * l * std::cos(o.tau) + (b + ld) * std::sin(o.tau);
      }
      double operator()(const NOp& o) const {
        return -la * l * std::sin(o.theta) + ld * std::cos(o.theta);
      }
      double operator()(const TOp& o) const {
        return la * l * std::cos(o.tau) + ld * std::sin(o.tau);
      }
    } v{l, b, la, ld};
    beta[i] = std::visit(v, op);
  }
  return CurvaturePair::from_samples(mate_interval(cp.interval(), lam.closes),
                                     std::move(ell), std::move(beta));
}

// ------------------------------------------------- inverse, composition

MatePair inverse_mate(const MatePair& mp) {
  MateConfig cfg{mp.config.tau, mp.config.theta, -mp.lambda.lambda.front(),
                 SolveMode::kAuto};
  LambdaSolution lam;
  lam.grid = mp.lambda.grid;
  lam.lambda.reserve(lam.grid.size());
  lam.lambda_d1.reserve(lam.grid.size());
  for (double x : mp.lambda.lambda) lam.lambda.push_back(-x);
  for (double x : mp.lambda.lambda_d1) lam.lambda_d1.push_back(-x);
  lam.lambda_end = -mp.lambda.lambda_end;
  lam.closes = mp.lambda.closes;
  lam.mode = mp.lambda.mode;
  lam.vanishing = mp.lambda.vanishing;
  lam.substeps = mp.lambda.substeps;
  const CurvaturePair& cp = mp.mate_curvature;
  fill_residual(cp.interval(), cp.ell(), cp.beta(), cfg, lam);
  return assemble(mp.mate, cp, cfg, lam);
}

CurveDiscrepancy compare_curves(const LegendreCurve& a, const LegendreCurve& b) {
  const ParamInterval& ia = a.interval();
  const ParamInterval& ib = b.interval();
  if (ia.n_samples != ib.n_samples ||
      std::abs(ia.t_start - ib.t_start) > 1e-12 * std::max(1.0, std::abs(ia.t_start)) ||
      std::abs(ia.step() - ib.step()) > 1e-12 * ia.step()) {
    fail(ErrorCode::kInvalidInput, "curves are not sampled on the same grid");
  }
  CurveDiscrepancy d;
  for (double t : ia.grid()) {
    d.position = std::max(d.position, distance(a.gamma().position(t), b.gamma().position(t)));
    d.normal = std::max(d.normal, distance(a.nu(t), b.nu(t)));
  }
  return d;
}

Composition compose_mates(const MatePair& mp12, const MatePair& mp23) {
  const double mtol = mp12.mate_tol;
  const CurveDiscrepancy link = compare_curves(mp12.mate, mp23.source);
  if (link.position > mtol || link.normal > mtol) {
    std::ostringstream os;
    os << "first mate is not the second source (position " << link.position
       << ", normal " << link.normal << ")";
    fail(ErrorCode::kChainMismatch, os.str());
  }
  double dir = 0.0;
  for (std::size_t i = 0; i < mp12.direction.size(); ++i) {
    dir = std::max(dir, (mp12.direction[i] - mp23.direction[i]).norm());
  }
  if (dir > mtol) {
    std::ostringstream os;
    os << "translation directions do not chain (max gap " << dir << ")";
    fail(ErrorCode::kChainMismatch, os.str());
  }
  const auto& l1 = mp12.lambda.lambda;
  const auto& l2 = mp23.lambda.lambda;
  double sum = 0.0;
  for (std::size_t i = 0; i < l1.size(); ++i) sum = std::max(sum, std::abs(l1[i] + l2[i]));
  if (sum <= tol::kLambdaVanish * mp12.source.diameter()) {
    IdentityReport r;
    r.max_lambda_sum = sum;
    r.tolerance = mtol;
    for (double t : mp12.source.interval().grid()) {
      r.position_discrepancy =
          std::max(r.position_discrepancy, distance(mp12.source.gamma().position(t),
                                                    mp23.mate.gamma().position(t)));
    }
    r.pass = r.position_discrepancy <= r.tolerance;
    return r;
  }
  MateConfig cfg{mp12.config.theta, mp23.config.tau, l1.front() + l2.front(),
                 SolveMode::kAuto};
  LambdaSolution lam;
  lam.grid = mp12.lambda.grid;
  lam.lambda.resize(l1.size());
  lam.lambda_d1.resize(l1.size());
  for (std::size_t i = 0; i < l1.size(); ++i) {
    lam.lambda[i] = l1[i] + l2[i];
    lam.lambda_d1[i] = mp12.lambda.lambda_d1[i] + mp23.lambda.lambda_d1[i];
  }
  lam.closes = mp12.lambda.closes && mp23.lambda.closes;
  lam.mode = SolveMode::kOde;
  const CurvaturePair cp = legendre_curvature(mp12.source);
  // An open second leg carries no value at the closing node; difference the
  // sum on the open grid instead.
  const bool seam_known = mp23.source.interval().periodic || !cp.interval().periodic;
  lam.lambda_end = seam_known ? mp12.lambda.lambda_end + mp23.lambda.lambda_end
                              : lam.lambda.back();
  fill_residual(seam_known ? cp.interval() : mp23.source.interval(), cp.ell(), cp.beta(),
                cfg, lam);
  lam.vanishing = max_abs(lam.lambda) <= tol::kLambdaVanish * mp12.source.diameter();
  return assemble(mp12.source, cp, cfg, lam);
}

MateRelation check_mate_relation(const LegendreCurve& a, const LegendreCurve& b,
                                 const AngleFn& theta, const AngleFn& tau) {
  const ParamInterval& ia = a.interval();
  if (ia.n_samples != b.interval().n_samples) {
    fail(ErrorCode::kInvalidInput, "curves are not sampled on the same grid");
  }
  MateRelation r;
  r.tolerance = tol::mate_tol(a.diameter(), a.sampled() || b.sampled());
  for (double t : ia.grid()) {
    const Vec2 u = frame_from_angle(a.nu(t), theta(t)).vec();
    const Vec2 w = frame_from_angle(b.nu(t), tau(t)).vec();
    const Vec2 d = b.gamma().position(t) - a.gamma().position(t);
    r.lambda.push_back(dot(d, u));
    r.direction_residual = std::max(r.direction_residual, (u - w).norm());
    r.position_residual = std::max(r.position_residual, std::abs(det(u, d)));
  }
  r.related = r.direction_residual <= r.tolerance && r.position_residual <= r.tolerance;
  return r;
}

}  // namespace legcurve
