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

#ifndef LEGCURVE_LEGENDRE_HPP_
#define LEGCURVE_LEGENDRE_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "legcurve/curve_model.hpp"
#include "legcurve/plane.hpp"
#include "legcurve/residual.hpp"

namespace legcurve {

/// Unit normal field nu(t) with its first two derivatives.
class NormalField {
 public:
  using UnitEval = std::function<UnitVec2(double)>;
  using Eval = std::function<Vec2(double)>;

  static NormalField analytic(UnitEval nu, Eval d1, Eval d2);
  /// Field sampled on the interval's grid; derivatives by 4th-order
  /// differences, values between nodes by cubic interpolation followed by
  /// renormalisation.
  static NormalField from_nodes(const ParamInterval& interval,
                                std::vector<Vec2> nodes);

  bool sampled() const { return sampled_; }
  UnitVec2 nu(double t) const { return fns_->nu(t); }
  Vec2 d1(double t) const { return fns_->d1(t); }
  Vec2 d2(double t) const { return fns_->d2(t); }

  NormalField negated() const;

 private:
  struct Fns {
    UnitEval nu;
    Eval d1;
    Eval d2;
  };
  NormalField(bool sampled, std::shared_ptr<const Fns> fns)
      : sampled_(sampled), fns_(std::move(fns)) {}

  bool sampled_ = false;
  std::shared_ptr<const Fns> fns_;
};

/// A frontal together with its unit normal: (gamma, nu) with
/// gamma'(t) . nu(t) = 0. The moving frame is {nu, mu = J(nu)}.
class LegendreCurve {
 public:
  /// Validates tangency on the grid; throws kNotLegendre otherwise.
  /// `speed_hint` raises the velocity scale used for the tangency
  /// tolerance (mates whose curve collapses to a point pass the source's
  /// speed here).
  LegendreCurve(CurveModel gamma, NormalField nu, double speed_hint = 0.0);

  const CurveModel& gamma() const { return gamma_; }
  const NormalField& normal() const { return nu_; }
  const ParamInterval& interval() const { return gamma_.interval(); }

  UnitVec2 nu(double t) const { return nu_.nu(t); }
  UnitVec2 mu(double t) const { return rotate_j(nu_.nu(t)); }
  Vec2 nu_d1(double t) const { return nu_.d1(t); }
  Vec2 nu_d2(double t) const { return nu_.d2(t); }

  bool sampled() const { return gamma_.sampled() || nu_.sampled(); }
  double diameter() const { return gamma_.diameter(); }
  double speed_scale() const { return speed_scale_; }
  double leg_tol() const;
  /// max |gamma' . nu| over the grid.
  double tangency_residual() const { return tangency_residual_; }

  /// (gamma, -nu), a Legendre curve with curvature (ell, -beta).
  LegendreCurve with_flipped_normal() const;

 private:
  CurveModel gamma_;
  NormalField nu_;
  double speed_scale_ = 0.0;
  double tangency_residual_ = 0.0;
};

/// Legendre curvature (ell, beta) sampled on a grid, with 4th-order
/// difference derivatives of both sequences.
class CurvaturePair {
 public:
  /// Errors: kInvalidInput on length mismatch or invalid interval.
  static CurvaturePair from_samples(const ParamInterval& interval,
                                    std::vector<double> ell,
                                    std::vector<double> beta);

  const ParamInterval& interval() const { return interval_; }
  std::size_t size() const { return grid_.size(); }
  std::span<const double> grid() const { return grid_; }
  std::span<const double> ell() const { return ell_; }
  std::span<const double> beta() const { return beta_; }
  std::span<const double> ell_d1() const { return ell_d1_; }
  std::span<const double> ell_d2() const { return ell_d2_; }
  std::span<const double> beta_d1() const { return beta_d1_; }
  std::span<const double> beta_d2() const { return beta_d2_; }

  // Cubic interpolation between nodes.
  double ell_at(double t) const;
  double beta_at(double t) const;
  double ell_d1_at(double t) const;
  double ell_d2_at(double t) const;
  double beta_d1_at(double t) const;
  double beta_d2_at(double t) const;

  double max_abs_ell() const;
  double max_abs_beta() const;

 private:
  double at(const std::vector<double>& v, double t) const;

  ParamInterval interval_;
  std::vector<double> grid_, ell_, beta_;
  std::vector<double> ell_d1_, ell_d2_, beta_d1_, beta_d2_;
};

enum class CuspKind {
  kRegular,
  kCusp3_2,
  kCusp5_2,
  kCusp4_3,
  kCusp5_3,
  kInconclusive,
};

std::string_view to_string(CuspKind kind);

struct CuspWitness {
  double beta = 0, beta_d1 = 0, beta_d2 = 0;
  double ell = 0, ell_d1 = 0, ell_d2 = 0;
  /// ell'' beta' - ell' beta''
  double jet_det = 0;
};

struct CuspReport {
  double t0 = 0.0;
  CuspKind kind = CuspKind::kInconclusive;
  CuspWitness witness;
};

/// (ell, beta) on the curve's grid: ell = nu' . mu, beta = gamma' . mu.
/// Errors: kNotLegendre when |gamma' - beta mu| exceeds leg_tol anywhere.
CurvaturePair legendre_curvature(const LegendreCurve& lc);

/// (gamma, n) with n = J(gamma'/|gamma'|). Curvature is (|gamma'| kappa,
/// -|gamma'|). Errors: kSingularPoint for non-regular input.
LegendreCurve from_regular(const CurveModel& c);

/// max |ell - kappa |beta|| over the grid points with |beta| > sing_tol,
/// against cross_tol * max(1, max |ell|). Errors: kInvalidInput when no
/// grid point is regular.
ResidualReport check_ell_kappa_relation(const LegendreCurve& lc);
ResidualReport check_ell_kappa_relation(const LegendreCurve& lc,
                                        const CurvaturePair& cp);

/// max over the grid of |nu' - ell mu| and |mu' + ell nu|.
ResidualReport frenet_closure(const LegendreCurve& lc, const CurvaturePair& cp);

/// Locate and classify the singular points (zeros of beta).
///
/// Candidate events are runs of near-zero samples, sign changes of beta and
/// local minima of |beta| whose refined value is near zero. Each event is
/// refined on the interpolated pair and then tested with the cusp criteria
/// in the order 3/2, 5/2, 4/3, 5/3. "= 0" means |x| <= sing_tol and "!= 0"
/// means |x| > nz_tol, both relative to `beta_scale` (default max |beta|);
/// anything else is reported as inconclusive.
std::vector<CuspReport> classify_singularities(
    const CurvaturePair& cp, std::optional<double> beta_scale = std::nullopt);

/// Classification of a single jet, exposed for testing.
CuspKind classify_jet(const CuspWitness& w, double beta_scale);

/// Zeros of ell by sign-change bracketing and bisection (1e-10 accuracy).
std::vector<double> inflection_points(const CurvaturePair& cp);

/// Regular Frenet frame recovered from the Legendre frame on a regular
/// stretch: t = sign(beta) mu, n = J(t) = -sign(beta) nu.
struct RegularFrames {
  std::vector<double> grid;
  std::vector<UnitVec2> tangent;
  std::vector<UnitVec2> normal;
  std::vector<int> sign;
};

/// Frames on the grid nodes inside [range.first, range.second] (the whole
/// grid when omitted). Errors: kSingularPoint if |beta| <= sing_tol there.
RegularFrames to_regular_frames(
    const LegendreCurve& lc,
    std::optional<std::pair<double, double>> range = std::nullopt);

/// Built-in Legendre curves: circle with outward normal (cos wt, sin wt),
/// astroid with normal (sin t, cos t); line and ellipse via from_regular.
LegendreCurve builtin_legendre(const BuiltinSpec& spec);

/// Legendre curve from sampled positions and normals on a uniform grid.
LegendreCurve legendre_from_samples(std::span<const TimedPoint> points,
                                    std::span<const Vec2> normals,
                                    bool periodic);

}  // namespace legcurve

#endif  // LEGCURVE_LEGENDRE_HPP_
