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

#include "legcurve/curve_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "legcurve/error.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve {

namespace {

struct NodeData {
  ParamInterval interval;
  std::array<std::vector<Vec2>, 4> jets;
};

Vec2 interpolate_node(const NodeData& d, int order, double t) {
  return interpolate<Vec2>(d.jets[order], d.interval.t_start,
                           d.interval.step(), d.interval.periodic, t);
}

}  // namespace

CurveModel::CurveModel(Kind kind, ParamInterval interval,
                       std::shared_ptr<const Jets> jets)
    : kind_(kind), interval_(interval), jets_(std::move(jets)) {
  interval_.validate();
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin, ymin = xmin, ymax = -xmin;
  min_speed_ = std::numeric_limits<double>::infinity();
  max_speed_ = 0.0;
  for (double t : interval_.grid()) {
    const Vec2 p = position(t);
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
    const double v = d1(t).norm();
    min_speed_ = std::min(min_speed_, v);
    max_speed_ = std::max(max_speed_, v);
  }
  diameter_ = std::hypot(xmax - xmin, ymax - ymin);
}

CurveModel CurveModel::analytic(ParamInterval interval, Jets jets) {
  for (const auto& f : jets) {
    if (!f) fail(ErrorCode::kInvalidInput, "analytic curve needs four jets");
  }
  return CurveModel(Kind::kAnalytic, interval,
                    std::make_shared<const Jets>(std::move(jets)));
}

CurveModel CurveModel::from_node_jets(ParamInterval interval,
                                      std::array<std::vector<Vec2>, 4> jets) {
  interval.validate();
  for (const auto& j : jets) {
    if (j.size() != static_cast<std::size_t>(interval.n_samples)) {
      fail(ErrorCode::kInvalidInput, "node jets do not match the grid");
    }
  }
  auto data = std::make_shared<const NodeData>(NodeData{interval, std::move(jets)});
  Jets fns;
  for (int k = 0; k < 4; ++k) {
    fns[k] = [data, k](double t) { return interpolate_node(*data, k, t); };
  }
  return CurveModel(Kind::kSampled, interval,
                    std::make_shared<const Jets>(std::move(fns)));
}

Vec2 CurveModel::derivative(int order, double t) const {
  if (order < 0 || order > 3) {
    fail(ErrorCode::kInvalidInput, "derivative order must be in 0..3");
  }
  return (*jets_)[order](t);
}

double CurveModel::reg_tol() const {
  return tol::reg_tol(diameter_, interval_.length());
}

double BuiltinSpec::param(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

ParamInterval BuiltinSpec::default_interval(BuiltinKind kind, int n_samples,
                                            double w) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  switch (kind) {
    case BuiltinKind::kLine:
      return {-1.0, 1.0, n_samples, false};
    case BuiltinKind::kCircle:
      return {0.0, kTwoPi / std::abs(w), n_samples, true};
    case BuiltinKind::kEllipse:
    case BuiltinKind::kAstroid:
      return {0.0, kTwoPi, n_samples, true};
  }
  return {0.0, kTwoPi, n_samples, true};
}

BuiltinKind builtin_kind_from_name(const std::string& name) {
  if (name == "line") return BuiltinKind::kLine;
  if (name == "circle") return BuiltinKind::kCircle;
  if (name == "ellipse") return BuiltinKind::kEllipse;
  if (name == "astroid") return BuiltinKind::kAstroid;
  fail(ErrorCode::kInvalidInput, "unknown built-in curve '" + name + "'");
}

std::string builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::kLine: return "line";
    case BuiltinKind::kCircle: return "circle";
    case BuiltinKind::kEllipse: return "ellipse";
    case BuiltinKind::kAstroid: return "astroid";
  }
  return "unknown";
}

namespace {

void check_keys(const BuiltinSpec& spec, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : spec.params) {
    if (!ok.count(k)) {
      fail(ErrorCode::kInvalidInput, "unknown parameter '" + k + "' for " +
                                         builtin_name(spec.kind));
    }
    if (!std::isfinite(v)) {
      fail(ErrorCode::kInvalidInput, "parameter '" + k + "' is not finite");
    }
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive, got " << v;
    fail(ErrorCode::kInvalidInput, os.str());
  }
}

}  // namespace

CurveModel build_builtin(const BuiltinSpec& spec) {
  CurveModel::Jets jets;
  switch (spec.kind) {
    case BuiltinKind::kLine: {
      check_keys(spec, {"px", "py", "dx", "dy"});
      const Vec2 p(spec.param("px", 0.0), spec.param("py", 0.0));
      const Vec2 d(spec.param("dx", 1.0), spec.param("dy", 0.0));
      require_positive(d.norm(), "line direction length");
      jets = {[=](double t) { return p + t * d; }, [=](double) { return d; },
              [](double) { return Vec2(); }, [](double) { return Vec2(); }};
      break;
    }
    case BuiltinKind::kCircle: {
      check_keys(spec, {"r", "cx", "cy", "w"});
      const double r = spec.param("r", 1.0);
      const double w = spec.param("w", 1.0);
      require_positive(r, "circle radius r");
      if (w == 0.0) fail(ErrorCode::kInvalidInput, "circle speed w must be nonzero");
      const Vec2 c(spec.param("cx", 0.0), spec.param("cy", 0.0));
      jets = {
          [=](double t) { return c + r * Vec2(std::cos(w * t), std::sin(w * t)); },
          [=](double t) { return r * w * Vec2(-std::sin(w * t), std::cos(w * t)); },
          [=](double t) { return -r * w * w * Vec2(std::cos(w * t), std::sin(w * t)); },
          [=](double t) { return r * w * w * w * Vec2(std::sin(w * t), -std::cos(w * t)); }};
      break;
    }
    case BuiltinKind::kEllipse: {
      check_keys(spec, {"a", "b", "cx", "cy"});
      const double a = spec.param("a", 2.0);
      const double b = spec.param("b", 1.0);
      require_positive(a, "ellipse semi-axis a");
      require_positive(b, "ellipse semi-axis b");
      const Vec2 c(spec.param("cx", 0.0), spec.param("cy", 0.0));
      jets = {[=](double t) { return c + Vec2(a * std::cos(t), b * std::sin(t)); },
              [=](double t) { return Vec2(-a * std::sin(t), b * std::cos(t)); },
              [=](double t) { return Vec2(-a * std::cos(t), -b * std::sin(t)); },
              [=](double t) { return Vec2(a * std::sin(t), -b * std::cos(t)); }};
      break;
    }
    case BuiltinKind::kAstroid: {
      check_keys(spec, {"a"});
      const double a = spec.param("a", 1.0);
      require_positive(a, "astroid scale a");
      jets = {[=](double t) {
                const double c = std::cos(t), s = std::sin(t);
                return a * Vec2(c * c * c, s * s * s);
              },
              [=](double t) {
                const double c = std::cos(t), s = std::sin(t);
                return a * Vec2(-3 * c * c * s, 3 * s * s * c);
              },
              [=](double t) {
                const double c = std::cos(t), s = std::sin(t);
                return a * Vec2(6 * c * s * s - 3 * c * c * c, 6 * s * c * c - 3 * s * s * s);
              },
              [=](double t) {
                const double c = std::cos(t), s = std::sin(t);
                return a * Vec2(-6 * s * s * s + 21 * c * c * s, 6 * c * c * c - 21 * s * s * c);
              }};
      break;
    }
  }
  CurveModel model = CurveModel::analytic(spec.interval, std::move(jets));
  if (spec.interval.periodic) {
    const double gap = distance(model.position(spec.interval.t_start),
                                model.position(spec.interval.t_end));
    if (gap > tol::geom_tol(model.diameter())) {
      std::ostringstream os;
      os << builtin_name(spec.kind) << " does not close on the periodic interval (gap "
         << gap << ")";
      fail(ErrorCode::kInvalidInput, os.str());
    }
  }
  return model;
}

ParamInterval validate_uniform_grid(std::span<const double> ts, bool periodic) {
  const int n = static_cast<int>(ts.size());
  if (n < ParamInterval::kMinSamples) {
    std::ostringstream os;
    os << "need at least " << ParamInterval::kMinSamples << " samples, got " << n;
    fail(ErrorCode::kInvalidInput, os.str());
  }
  for (int i = 1; i < n; ++i) {
    if (ts[i] == ts[i - 1]) {
      std::ostringstream os;
      os << "duplicate parameter value t = " << ts[i];
      fail(ErrorCode::kInvalidInput, os.str());
    }
    if (!(ts[i] > ts[i - 1])) {
      std::ostringstream os;
      os << "parameter values must increase (row " << i << ")";
      fail(ErrorCode::kInvalidInput, os.str());
    }
  }
  const double h = (ts[n - 1] - ts[0]) / (n - 1);
  for (int i = 1; i < n; ++i) {
    if (std::abs((ts[i] - ts[i - 1]) - h) > 1e-9 * h) {
      std::ostringstream os;
      os << "non-uniform grid at row " << i;
      fail(ErrorCode::kInvalidInput, os.str());
    }
  }
  ParamInterval iv;
  iv.t_start = ts[0];
  iv.t_end = periodic ? ts[0] + n * h : ts[n - 1];
  iv.n_samples = n;
  iv.periodic = periodic;
  iv.validate();
  return iv;
}

CurveModel build_sampled(std::span<const TimedPoint> points, bool periodic) {
  std::vector<TimedPoint> rows(points.begin(), points.end());
  if (periodic && rows.size() > ParamInterval::kMinSamples) {
    double xmin = rows[0].p.x(), xmax = xmin, ymin = rows[0].p.y(), ymax = ymin;
    for (const auto& r : rows) {
      xmin = std::min(xmin, r.p.x());
      xmax = std::max(xmax, r.p.x());
      ymin = std::min(ymin, r.p.y());
      ymax = std::max(ymax, r.p.y());
    }
    const double diam = std::hypot(xmax - xmin, ymax - ymin);
    if (distance(rows.back().p, rows.front().p) <= tol::geom_tol(diam)) rows.pop_back();
  }
  std::vector<double> ts;
  std::vector<Vec2> ps;
  ts.reserve(rows.size());
  ps.reserve(rows.size());
  for (const auto& r : rows) {
    ts.push_back(r.t);
    ps.push_back(r.p);
  }
  const ParamInterval iv = validate_uniform_grid(ts, periodic);
  const double h = iv.step();
  std::array<std::vector<Vec2>, 4> jets;
  jets[1] = differentiate<Vec2>(ps, h, 1, periodic);
  jets[2] = differentiate<Vec2>(ps, h, 2, periodic);
  jets[3] = differentiate<Vec2>(ps, h, 3, periodic);
  jets[0] = std::move(ps);
  return CurveModel::from_node_jets(iv, std::move(jets));
}

namespace {

// Composite Simpson on each grid interval; returns the node parameters
// (including the closing node for periodic curves) and cumulative length.
void cumulative_length(const CurveModel& c, std::vector<double>& ts,
                       std::vector<double>& s) {
  const ParamInterval& iv = c.interval();
  ts = iv.grid();
  if (iv.periodic) ts.push_back(iv.t_end);
  s.assign(ts.size(), 0.0);
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const double a = ts[k], b = ts[k + 1];
    const double m = 0.5 * (a + b);
    s[k + 1] = s[k] + (b - a) / 6.0 *
                          (c.d1(a).norm() + 4.0 * c.d1(m).norm() + c.d1(b).norm());
  }
}

// Monotone cubic Hermite interpolant of t(s) with node slopes limited by
// the Fritsch-Carlson condition.
struct MonotoneMap {
  std::vector<double> s, t, slope;

  double operator()(double x) const {
    const std::size_t n = s.size();
    std::size_t k = static_cast<std::size_t>(
        std::upper_bound(s.begin(), s.end(), x) - s.begin());
    k = std::clamp<std::size_t>(k, 1, n - 1) - 1;
    const double h = s[k + 1] - s[k];
    const double u = (x - s[k]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * t[k] + (u3 - 2 * u2 + u) * h * slope[k] +
           (-2 * u3 + 3 * u2) * t[k + 1] + (u3 - u2) * h * slope[k + 1];
  }
};

MonotoneMap make_monotone(std::vector<double> s, std::vector<double> t,
                          std::vector<double> slope) {
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double secant = (t[k + 1] - t[k]) / (s[k + 1] - s[k]);
    const double a = slope[k] / secant, b = slope[k + 1] / secant;
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double f = 3.0 / std::sqrt(r);
      slope[k] = f * a * secant;
      slope[k + 1] = f * b * secant;
    }
  }
  return {std::move(s), std::move(t), std::move(slope)};
}

}  // namespace

double curve_length(const CurveModel& c) {
  std::vector<double> ts, s;
  cumulative_length(c, ts, s);
  return s.back();
}

CurveModel arclength_reparametrize(const CurveModel& c) {
  const ParamInterval& iv = c.interval();
  const double reg = c.reg_tol();
  {
    std::vector<double> ts = iv.grid();
    const double h = iv.step();
    for (double t : ts) {
      for (double probe : {t, t + 0.5 * h}) {
        if (!iv.periodic && probe > iv.t_end) continue;
        if (c.d1(probe).norm() <= reg) {
          std::ostringstream os;
          os << "curve is singular near t = " << probe << " (|d1| <= " << reg << ")";
          fail(ErrorCode::kSingularPoint, os.str());
        }
      }
    }
  }
  std::vector<double> ts, s;
  cumulative_length(c, ts, s);
  const double total = s.back();
  std::vector<double> slope(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) slope[k] = 1.0 / c.d1(ts[k]).norm();
  auto map = std::make_shared<const MonotoneMap>(
      make_monotone(std::move(s), ts, std::move(slope)));

  const double t_span = iv.length();
  const bool periodic = iv.periodic;
  auto to_t = [map, total, t_span, periodic](double arc) {
    if (periodic) {
      const double turns = std::floor(arc / total);
      return (*map)(arc - turns * total) + turns * t_span;
    }
    return (*map)(std::clamp(arc, 0.0, total));
  };
  auto base = std::make_shared<const CurveModel>(c);
  CurveModel::Jets jets = {
      [base, to_t](double arc) { return base->position(to_t(arc)); },
      [base, to_t](double arc) {
        const Vec2 g = base->d1(to_t(arc));
        return g / g.norm();
      },
      [base, to_t](double arc) {
        const double t = to_t(arc);
        const Vec2 g = base->d1(t), a = base->d2(t);
        const double v2 = g.squared_norm();
        return a / v2 - g * (dot(g, a) / (v2 * v2));
      },
      [base, to_t](double arc) {
        const double t = to_t(arc);
        const Vec2 g = base->d1(t), a = base->d2(t), j = base->d3(t);
        const double v = g.norm();
        const double ga = dot(g, a);
        const double tp = 1.0 / v;
        const double tpp = -ga / std::pow(v, 4);
        const double tppp = -(dot(a, a) + dot(g, j)) / std::pow(v, 5) +
                            4.0 * ga * ga / std::pow(v, 7);
        return j * (tp * tp * tp) + a * (3.0 * tp * tpp) + g * tppp;
      }};
  ParamInterval out{0.0, total, iv.n_samples, iv.periodic};
  if (c.kind() == CurveModel::Kind::kAnalytic) {
    return CurveModel::analytic(out, std::move(jets));
  }
  // Sampled inputs stay sampled: evaluate the chain-rule jets on the new
  // grid and interpolate from there.
  std::array<std::vector<Vec2>, 4> nodes;
  const std::vector<double> grid = out.grid();
  for (int k = 0; k < 4; ++k) {
    nodes[k].reserve(grid.size());
    for (double x : grid) nodes[k].push_back(jets[k](x));
  }
  return CurveModel::from_node_jets(out, std::move(nodes));
}

double regular_curvature(const CurveModel& c, double t) {
  const Vec2 g = c.d1(t);
  const double v = g.norm();
  if (v <= c.reg_tol()) {
    std::ostringstream os;
    os << "curvature undefined at singular point t = " << t;
    fail(ErrorCode::kSingularPoint, os.str());
  }
  return det(g, c.d2(t)) / (v * v * v);
}

}  // namespace legcurve
