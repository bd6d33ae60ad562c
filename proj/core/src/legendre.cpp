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

#include "legcurve/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "legcurve/error.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve {

// ---------------------------------------------------------------- normals

NormalField NormalField::analytic(UnitEval nu, Eval d1, Eval d2) {
  if (!nu || !d1 || !d2) {
    fail(ErrorCode::kInvalidInput, "normal field needs value and two derivatives");
  }
  return NormalField(false, std::make_shared<const Fns>(
                                Fns{std::move(nu), std::move(d1), std::move(d2)}));
}

NormalField NormalField::from_nodes(const ParamInterval& interval,
                                    std::vector<Vec2> nodes) {
  interval.validate();
  if (nodes.size() != static_cast<std::size_t>(interval.n_samples)) {
    fail(ErrorCode::kInvalidInput, "normal samples do not match the grid");
  }
  for (auto& v : nodes) v = UnitVec2::from(v).vec();
  struct Data {
    ParamInterval iv;
    std::vector<Vec2> v, d1, d2;
  };
  const double h = interval.step();
  auto d = std::make_shared<Data>();
  d->iv = interval;
  d->d1 = differentiate<Vec2>(nodes, h, 1, interval.periodic);
  d->d2 = differentiate<Vec2>(nodes, h, 2, interval.periodic);
  d->v = std::move(nodes);
  std::shared_ptr<const Data> cd = d;
  auto at = [cd](const std::vector<Vec2>& f, double t) {
    return interpolate<Vec2>(f, cd->iv.t_start, cd->iv.step(), cd->iv.periodic, t);
  };
  Fns fns{[cd, at](double t) { return UnitVec2::normalize(at(cd->v, t)); },
          [cd, at](double t) { return at(cd->d1, t); },
          [cd, at](double t) { return at(cd->d2, t); }};
  return NormalField(true, std::make_shared<const Fns>(std::move(fns)));
}

NormalField NormalField::negated() const {
  auto base = fns_;
  Fns fns{[base](double t) { return -base->nu(t); },
          [base](double t) { return -base->d1(t); },
          [base](double t) { return -base->d2(t); }};
  return NormalField(sampled_, std::make_shared<const Fns>(std::move(fns)));
}

// ---------------------------------------------------------- Legendre curve

LegendreCurve::LegendreCurve(CurveModel gamma, NormalField nu, double speed_hint)
    : gamma_(std::move(gamma)), nu_(std::move(nu)) {
  speed_scale_ = std::max(gamma_.max_speed(), speed_hint);
  double worst = 0.0, worst_t = 0.0;
  for (double t : gamma_.interval().grid()) {
    const double r = std::abs(dot(gamma_.d1(t), nu_.nu(t)));
    if (r > worst) {
      worst = r;
      worst_t = t;
    }
  }
  tangency_residual_ = worst;
  if (worst > leg_tol()) {
    std::ostringstream os;
    os << "not a Legendre curve: |gamma' . nu| = " << worst << " at t = " << worst_t
       << " exceeds " << leg_tol();
    fail(ErrorCode::kNotLegendre, os.str());
  }
}

double LegendreCurve::leg_tol() const {
  return tol::leg_tol(speed_scale_, sampled());
}

LegendreCurve LegendreCurve::with_flipped_normal() const {
  return LegendreCurve(gamma_, nu_.negated(), speed_scale_);
}

// -------------------------------------------------------- curvature pair

CurvaturePair CurvaturePair::from_samples(const ParamInterval& interval,
                                          std::vector<double> ell,
                                          std::vector<double> beta) {
  interval.validate();
  const auto n = static_cast<std::size_t>(interval.n_samples);
  if (ell.size() != n || beta.size() != n) {
    fail(ErrorCode::kInvalidInput, "curvature samples do not match the grid");
  }
  CurvaturePair cp;
  cp.interval_ = interval;
  cp.grid_ = interval.grid();
  const double h = interval.step();
  cp.ell_d1_ = differentiate<double>(ell, h, 1, interval.periodic);
  cp.ell_d2_ = differentiate<double>(ell, h, 2, interval.periodic);
  cp.beta_d1_ = differentiate<double>(beta, h, 1, interval.periodic);
  cp.beta_d2_ = differentiate<double>(beta, h, 2, interval.periodic);
  cp.ell_ = std::move(ell);
  cp.beta_ = std::move(beta);
  return cp;
}

double CurvaturePair::at(const std::vector<double>& v, double t) const {
  return interpolate<double>(v, interval_.t_start, interval_.step(),
                             interval_.periodic, t);
}

double CurvaturePair::ell_at(double t) const { return at(ell_, t); }
double CurvaturePair::beta_at(double t) const { return at(beta_, t); }
double CurvaturePair::ell_d1_at(double t) const { return at(ell_d1_, t); }
double CurvaturePair::ell_d2_at(double t) const { return at(ell_d2_, t); }
double CurvaturePair::beta_d1_at(double t) const { return at(beta_d1_, t); }
double CurvaturePair::beta_d2_at(double t) const { return at(beta_d2_, t); }

namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double CurvaturePair::max_abs_ell() const { return max_abs(ell_); }
double CurvaturePair::max_abs_beta() const { return max_abs(beta_); }

CurvaturePair legendre_curvature(const LegendreCurve& lc) {
  const ParamInterval& iv = lc.interval();
  std::vector<double> ell, beta;
  ell.reserve(iv.n_samples);
  beta.reserve(iv.n_samples);
  const double tol = lc.leg_tol();
  for (double t : iv.grid()) {
    const UnitVec2 mu = lc.mu(t);
    const Vec2 g = lc.gamma().d1(t);
    const double b = dot(g, mu);
    const double rec = (g - b * mu.vec()).norm();
    if (rec > tol) {
      std::ostringstream os;
      os << "not a Legendre curve: reconstruction residual " << rec << " at t = " << t;
      fail(ErrorCode::kNotLegendre, os.str());
    }
    ell.push_back(dot(lc.nu_d1(t), mu));
    beta.push_back(b);
  }
  return CurvaturePair::from_samples(iv, std::move(ell), std::move(beta));
}

LegendreCurve from_regular(const CurveModel& c) {
  const double reg = c.reg_tol();
  if (!(c.min_speed() > reg)) {
    std::ostringstream os;
    os << "curve is not regular: min |d1| = " << c.min_speed() << " <= " << reg;
    fail(ErrorCode::kSingularPoint, os.str());
  }
  auto base = std::make_shared<const CurveModel>(c);
  auto omega = [base](double t) {
    const Vec2 g = base->d1(t);
    return det(g, base->d2(t)) / g.squared_norm();
  };
  auto omega_d1 = [base](double t) {
    const Vec2 g = base->d1(t), a = base->d2(t), j = base->d3(t);
    const double g2 = g.squared_norm();
    return (det(g, j) * g2 - 2.0 * det(g, a) * dot(g, a)) / (g2 * g2);
  };
  NormalField::UnitEval nu = [base](double t) {
    return UnitVec2::normalize(rotate_j(base->d1(t)));
  };
  NormalField::Eval d1 = [base, omega](double t) {
    const Vec2 tt = base->d1(t) / base->d1(t).norm();
    return -omega(t) * tt;
  };
  NormalField::Eval d2 = [base, omega, omega_d1](double t) {
    const Vec2 tt = base->d1(t) / base->d1(t).norm();
    const double w = omega(t);
    return -omega_d1(t) * tt - (w * w) * rotate_j(tt);
  };
  NormalField field = NormalField::analytic(std::move(nu), std::move(d1), std::move(d2));
  if (c.sampled()) {
    // Derivatives of a sampled curve are difference quotients; keep the
    // sampled tolerance regime.
    std::vector<Vec2> nodes;
    for (double t : c.interval().grid()) nodes.push_back(field.nu(t).vec());
    return LegendreCurve(c, NormalField::from_nodes(c.interval(), std::move(nodes)));
  }
  return LegendreCurve(c, std::move(field));
}

// ------------------------------------------------------------- checks

ResidualReport check_ell_kappa_relation(const LegendreCurve& lc) {
  return check_ell_kappa_relation(lc, legendre_curvature(lc));
}

ResidualReport check_ell_kappa_relation(const LegendreCurve& lc,
                                        const CurvaturePair& cp) {
  const double s_tol = tol::sing_tol(cp.max_abs_beta());
  const double reg = lc.gamma().reg_tol();
  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const double b = cp.beta()[i];
    if (!(std::abs(b) > s_tol)) continue;
    const double t = cp.grid()[i];
    const Vec2 g = lc.gamma().d1(t);
    if (g.norm() <= reg) continue;
    // kappa |beta| with |beta| = |gamma'|.
    const double kb = det(g, lc.gamma().d2(t)) / g.squared_norm();
    worst = std::max(worst, std::abs(cp.ell()[i] - kb));
    ++used;
  }
  if (used == 0) {
    fail(ErrorCode::kInvalidInput, "no regular grid point to test ell = kappa |beta|");
  }
  return make_report(worst, tol::kCross * std::max(1.0, cp.max_abs_ell()), used);
}

ResidualReport frenet_closure(const LegendreCurve& lc, const CurvaturePair& cp) {
  double worst = 0.0;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const double t = cp.grid()[i];
    const double l = cp.ell()[i];
    const Vec2 nu = lc.nu(t), mu = lc.mu(t);
    const Vec2 nu_d = lc.nu_d1(t);
    const Vec2 mu_d = rotate_j(nu_d);
    worst = std::max(worst, (nu_d - l * mu).norm());
    worst = std::max(worst, (mu_d + l * nu).norm());
  }
  return make_report(worst, tol::kCross * std::max(1.0, cp.max_abs_ell()), cp.size());
}

// ----------------------------------------------------- singular points

std::string_view to_string(CuspKind kind) {
  switch (kind) {
    case CuspKind::kRegular: return "regular";
    case CuspKind::kCusp3_2: return "cusp_3_2";
    case CuspKind::kCusp5_2: return "cusp_5_2";
    case CuspKind::kCusp4_3: return "cusp_4_3";
    case CuspKind::kCusp5_3: return "cusp_5_3";
    case CuspKind::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CuspKind classify_jet(const CuspWitness& w, double beta_scale) {
  const double zt = tol::sing_tol(beta_scale);
  const double nt = tol::nz_tol(beta_scale);
  auto zero = [zt](double x) { return std::abs(x) <= zt; };
  auto nonzero = [nt](double x) { return std::abs(x) > nt; };
  if (!zero(w.beta)) return CuspKind::kRegular;
  if (nonzero(w.beta_d1) && nonzero(w.ell)) return CuspKind::kCusp3_2;
  if (zero(w.ell) && nonzero(w.beta_d1) && nonzero(w.jet_det)) return CuspKind::kCusp5_2;
  if (zero(w.beta_d1) && nonzero(w.beta_d2) && nonzero(w.ell)) return CuspKind::kCusp4_3;
  if (zero(w.beta_d1) && zero(w.ell) && nonzero(w.beta_d2) && nonzero(w.ell_d1)) {
    return CuspKind::kCusp5_3;
  }
  return CuspKind::kInconclusive;
}

namespace {

template <class F>
double bisect(F&& f, double a, double b, double tol) {
  double fa = f(a);
  if (fa == 0.0) return a;
  if (f(b) == 0.0) return b;
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double golden_min(F&& f, double a, double b) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 120 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Parameter of node i shifted into a contiguous frame when stepping past
// the end of a periodic grid.
double node_param(const ParamInterval& iv, long i) { return iv.t_start + i * iv.step(); }

double wrap_param(const ParamInterval& iv, double t) {
  if (!iv.periodic) return t;
  const double L = iv.length();
  double u = std::fmod(t - iv.t_start, L);
  if (u < 0) u += L;
  return iv.t_start + u;
}

}  // namespace

std::vector<CuspReport> classify_singularities(const CurvaturePair& cp,
                                               std::optional<double> beta_scale) {
  const double scale = beta_scale.value_or(cp.max_abs_beta());
  std::vector<CuspReport> out;
  if (!(scale > 0.0)) return out;
  const double zt = tol::sing_tol(scale);
  const ParamInterval& iv = cp.interval();
  const long n = static_cast<long>(cp.size());
  const bool periodic = iv.periodic;
  const double h = iv.step();
  auto beta = cp.beta();
  auto idx = [&](long i) { return periodic ? ((i % n) + n) % n : i; };
  auto valid = [&](long i) { return periodic || (i >= 0 && i < n); };
  auto abs_beta_at = [&](double t) { return std::abs(cp.beta_at(t)); };

  // Refine an event around node i to the location of the zero (sign change)
  // or of the minimum of |beta| on [t_{i-1}, t_{i+1}].
  auto refine = [&](long i) {
    const long lo = valid(i - 1) ? i - 1 : i;
    const long hi = valid(i + 1) ? i + 1 : i;
    const double a = node_param(iv, lo), b = node_param(iv, hi);
    auto bval = [&](double t) { return cp.beta_at(t); };
    const double ba = bval(a), bm = bval(node_param(iv, i)), bb = bval(b);
    if (bm == 0.0) return node_param(iv, i);
    if (ba * bm < 0.0) return bisect(bval, a, node_param(iv, i), 1e-14 * std::max(1.0, std::abs(a)));
    if (bm * bb < 0.0) return bisect(bval, node_param(iv, i), b, 1e-14 * std::max(1.0, std::abs(b)));
    auto bd = [&](double t) { return cp.beta_d1_at(t); };
    const double da = bd(a), db = bd(b);
    if (da * db < 0.0) {
      const double r = bisect(bd, a, b, 1e-14 * std::max(1.0, std::abs(b)));
      if (abs_beta_at(r) <= std::abs(bm)) return r;
    }
    return golden_min(abs_beta_at, a, b);
  };

  std::vector<double> events;
  // Runs of near-zero samples and local minima of |beta|.
  for (long i = 0; i < n; ++i) {
    const double bi = std::abs(beta[i]);
    const bool left_ok = !valid(i - 1) || bi <= std::abs(beta[idx(i - 1)]);
    const bool right_ok = !valid(i + 1) || bi <= std::abs(beta[idx(i + 1)]);
    if (left_ok && right_ok && bi <= std::max(zt, 1e-3 * scale)) {
      const double t = refine(i);
      if (abs_beta_at(t) <= zt) events.push_back(t);
    }
  }
  // Sign changes.
  const long last = periodic ? n : n - 1;
  for (long i = 0; i < last; ++i) {
    const double b0 = beta[i], b1 = beta[idx(i + 1)];
    if (b0 * b1 < 0.0) {
      const double a = node_param(iv, i), b = node_param(iv, i + 1);
      events.push_back(bisect([&](double t) { return cp.beta_at(t); }, a, b,
                              1e-14 * std::max(1.0, std::abs(b))));
    }
  }
  for (double& t : events) t = wrap_param(iv, t);
  std::sort(events.begin(), events.end());

  // Merge events closer than two grid steps, keeping the smaller |beta|.
  std::vector<double> merged;
  for (double t : events) {
    if (!merged.empty() && t - merged.back() < 2.0 * h) {
      if (abs_beta_at(t) < abs_beta_at(merged.back())) merged.back() = t;
      continue;
    }
    merged.push_back(t);
  }
  if (periodic && merged.size() > 1 &&
      merged.front() + iv.length() - merged.back() < 2.0 * h) {
    if (abs_beta_at(merged.back()) < abs_beta_at(merged.front())) {
      merged.front() = merged.back();
    }
    merged.pop_back();
    std::sort(merged.begin(), merged.end());
  }

  for (double t : merged) {
    CuspWitness w;
    w.beta = cp.beta_at(t);
    w.beta_d1 = cp.beta_d1_at(t);
    w.beta_d2 = cp.beta_d2_at(t);
    w.ell = cp.ell_at(t);
    w.ell_d1 = cp.ell_d1_at(t);
    w.ell_d2 = cp.ell_d2_at(t);
    w.jet_det = w.ell_d2 * w.beta_d1 - w.ell_d1 * w.beta_d2;
    out.push_back({t, classify_jet(w, scale), w});
  }
  return out;
}

std::vector<double> inflection_points(const CurvaturePair& cp) {
  const ParamInterval& iv = cp.interval();
  const long n = static_cast<long>(cp.size());
  auto ell = cp.ell();
  std::vector<double> roots;
  const long last = iv.periodic ? n : n - 1;
  auto f = [&](double t) { return cp.ell_at(t); };
  for (long i = 0; i < n; ++i) {
    if (ell[i] == 0.0) roots.push_back(cp.grid()[i]);
  }
  for (long i = 0; i < last; ++i) {
    const double a = ell[i], b = ell[(i + 1) % n];
    if (a * b < 0.0) {
      roots.push_back(wrap_param(
          iv, bisect(f, node_param(iv, i), node_param(iv, i + 1), 1e-12)));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-10; }),
              roots.end());
  return roots;
}

RegularFrames to_regular_frames(const LegendreCurve& lc,
                                std::optional<std::pair<double, double>> range) {
  const ParamInterval& iv = lc.interval();
  std::vector<double> grid = iv.grid();
  std::vector<double> beta(grid.size());
  double bmax = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    beta[i] = dot(lc.gamma().d1(grid[i]), lc.mu(grid[i]));
    bmax = std::max(bmax, std::abs(beta[i]));
  }
  const double zt = tol::sing_tol(bmax);
  RegularFrames out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    if (range && (t < range->first || t > range->second)) continue;
    if (!(std::abs(beta[i]) > zt)) {
      std::ostringstream os;
      os << "singular point inside requested range near t = " << t;
      fail(ErrorCode::kSingularPoint, os.str());
    }
    const int s = beta[i] > 0 ? 1 : -1;
    const UnitVec2 tangent = s > 0 ? lc.mu(t) : -lc.mu(t);
    out.grid.push_back(t);
    out.tangent.push_back(tangent);
    out.normal.push_back(rotate_j(tangent));
    out.sign.push_back(s);
  }
  if (out.grid.empty()) fail(ErrorCode::kInvalidInput, "requested range holds no grid node");
  return out;
}

LegendreCurve builtin_legendre(const BuiltinSpec& spec) {
  const CurveModel gamma = build_builtin(spec);
  switch (spec.kind) {
    case BuiltinKind::kCircle: {
      const double w = spec.param("w", 1.0);
      return LegendreCurve(
          gamma, NormalField::analytic(
                     [w](double t) { return UnitVec2::from_angle(w * t); },
                     [w](double t) { return w * Vec2(-std::sin(w * t), std::cos(w * t)); },
                     [w](double t) {
                       return -w * w * Vec2(std::cos(w * t), std::sin(w * t));
                     }));
    }
    case BuiltinKind::kAstroid:
      return LegendreCurve(
          gamma, NormalField::analytic(
                     [](double t) { return UnitVec2::from(Vec2(std::sin(t), std::cos(t))); },
                     [](double t) { return Vec2(std::cos(t), -std::sin(t)); },
                     [](double t) { return Vec2(-std::sin(t), -std::cos(t)); }));
    case BuiltinKind::kLine:
    case BuiltinKind::kEllipse:
      return from_regular(gamma);
  }
  return from_regular(gamma);
}

LegendreCurve legendre_from_samples(std::span<const TimedPoint> points,
                                    std::span<const Vec2> normals, bool periodic) {
  if (points.size() != normals.size()) {
    fail(ErrorCode::kInvalidInput, "positions and normals differ in length");
  }
  CurveModel gamma = build_sampled(points, periodic);
  std::vector<Vec2> nodes(normals.begin(),
                          normals.begin() + gamma.interval().n_samples);
  NormalField field = NormalField::from_nodes(gamma.interval(), std::move(nodes));
  return LegendreCurve(std::move(gamma), std::move(field));
}

}  // namespace legcurve
