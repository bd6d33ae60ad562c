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

#ifndef LEGCURVE_CURVE_MODEL_HPP_
#define LEGCURVE_CURVE_MODEL_HPP_

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "legcurve/plane.hpp"
#include "legcurve/sampling.hpp"

namespace legcurve {

/// Parametrised plane curve with derivatives up to order 3.
///
/// Analytic models carry closed-form jets. Sampled models are built from a
/// uniform grid of positions; their derivatives come from 4th-order
/// differences and values between nodes from cubic interpolation. Instances
/// are immutable and cheap to copy (the evaluators are shared).
class CurveModel {
 public:
  enum class Kind { kAnalytic, kSampled };
  using Eval = std::function<Vec2(double)>;
  /// position, d1, d2, d3
  using Jets = std::array<Eval, 4>;

  static CurveModel analytic(ParamInterval interval, Jets jets);
  /// Sampled model from node values and node derivatives (all on the
  /// interval's grid). Used by build_sampled and by mate construction.
  static CurveModel from_node_jets(ParamInterval interval,
                                   std::array<std::vector<Vec2>, 4> jets);

  Kind kind() const { return kind_; }
  bool sampled() const { return kind_ == Kind::kSampled; }
  const ParamInterval& interval() const { return interval_; }

  Vec2 position(double t) const { return (*jets_)[0](t); }
  Vec2 d1(double t) const { return (*jets_)[1](t); }
  Vec2 d2(double t) const { return (*jets_)[2](t); }
  Vec2 d3(double t) const { return (*jets_)[3](t); }
  /// order in 0..3
  Vec2 derivative(int order, double t) const;

  /// Bounding-box diagonal of the grid samples.
  double diameter() const { return diameter_; }
  /// max |d1| over the grid.
  double max_speed() const { return max_speed_; }
  /// min |d1| over the grid.
  double min_speed() const { return min_speed_; }
  /// Scale-aware singular-speed threshold for this curve.
  double reg_tol() const;

 private:
  CurveModel(Kind kind, ParamInterval interval,
             std::shared_ptr<const Jets> jets);

  Kind kind_;
  ParamInterval interval_;
  std::shared_ptr<const Jets> jets_;
  double diameter_ = 0.0;
  double max_speed_ = 0.0;
  double min_speed_ = 0.0;
};

enum class BuiltinKind { kLine, kCircle, kEllipse, kAstroid };

/// Closed-form curve description.
///
/// Parameters (all optional, defaults in brackets):
///   line:    px [0], py [0], dx [1], dy [0]      p + t d
///   circle:  r [1], cx [0], cy [0], w [1]        c + r (cos wt, sin wt)
///   ellipse: a [2], b [1], cx [0], cy [0]        c + (a cos t, b sin t)
///   astroid: a [1]                               a (cos^3 t, sin^3 t)
struct BuiltinSpec {
  BuiltinKind kind = BuiltinKind::kCircle;
  std::map<std::string, double> params;
  ParamInterval interval;

  double param(const std::string& key, double fallback) const;
  /// Default interval for a kind: one full period for closed curves,
  /// [-1, 1] for the line.
  static ParamInterval default_interval(BuiltinKind kind, int n_samples,
                                        double w = 1.0);
};

BuiltinKind builtin_kind_from_name(const std::string& name);
std::string builtin_name(BuiltinKind kind);

CurveModel build_builtin(const BuiltinSpec& spec);

struct TimedPoint {
  double t = 0.0;
  Vec2 p;
};

/// Sampled curve from (t, point) rows on a uniform grid. Errors: fewer than
/// 16 rows, non-increasing or duplicate t, spacing not uniform to 1e-9.
/// For periodic input the closing sample is omitted; a trailing row that
/// repeats the first position is dropped.
CurveModel build_sampled(std::span<const TimedPoint> points, bool periodic);

/// Uniform-grid check shared by the ingestion paths; returns the
/// interval the samples span.
ParamInterval validate_uniform_grid(std::span<const double> ts, bool periodic);

/// Unit-speed reparametrisation on [0, L]. The map s -> t is obtained by
/// composite Simpson integration of |d1| and monotone cubic inversion;
/// derivatives are the exact chain-rule derivatives at t(s).
/// Errors: kSingularPoint when min |d1| <= reg_tol.
CurveModel arclength_reparametrize(const CurveModel& c);

/// det(d1, d2) / |d1|^3. Errors: kSingularPoint when |d1(t)| <= reg_tol.
double regular_curvature(const CurveModel& c, double t);

/// Total length by composite Simpson on the grid.
double curve_length(const CurveModel& c);

}  // namespace legcurve

#endif  // LEGCURVE_CURVE_MODEL_HPP_
