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

#include "legcurve/io/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

#include "legcurve/error.hpp"

namespace legcurve::io {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;

  void add(const Vec2& p) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

}  // namespace

std::string render_svg(std::span<const Polyline> curves, std::span<const Marker> markers) {
  if (curves.empty()) fail(ErrorCode::kInvalidInput, "nothing to plot");
  Box all;
  for (const auto& c : curves) {
    if (c.points.empty()) fail(ErrorCode::kInvalidInput, "curve '" + c.label + "' is empty");
    for (const auto& p : c.points) all.add(p);
  }
  for (const auto& m : markers) all.add(m.at);

  double extent = std::max(all.width(), all.height());
  const double cx = 0.5 * (all.x0 + all.x1), cy = 0.5 * (all.y0 + all.y1);
  double w = all.width(), h = all.height();
  if (extent <= 1e-12 * std::max(1.0, std::max(std::abs(cx), std::abs(cy)))) {
    extent = w = h = 1.0;
  }
  w = std::max(w, 1e-3 * extent);
  h = std::max(h, 1e-3 * extent);
  const double mx = 0.05 * w, my = 0.05 * h;
  // Flip y: the SVG coordinate is -y.
  const double vx = cx - 0.5 * w - mx, vy = -(cy + 0.5 * h) - my;
  const double vw = w + 2 * mx, vh = h + 2 * my;
  const double stroke = 0.004 * std::max(vw, vh);
  const double dot = 2.5 * stroke;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' ' << num(vy)
     << ' ' << num(vw) << ' ' << num(vh) << "\" width=\"640\" height=\""
     << static_cast<int>(std::clamp(640.0 * vh / vw, 64.0, 2048.0)) << "\">\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    const char* color = kPalette[k % kPalette.size()];
    Box b;
    for (const auto& p : c.points) b.add(p);
    if (std::max(b.width(), b.height()) <= 1e-9 * extent) {
      os << "  <circle class=\"degenerate\" cx=\"" << num(b.x0) << "\" cy=\"" << num(-b.y0)
         << "\" r=\"" << num(dot) << "\" fill=\"" << color << "\"><title>"
         << escape(c.label) << "</title></circle>\n";
      continue;
    }
    os << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke)
       << "\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << (i ? " L" : "M") << num(c.points[i].x()) << ' ' << num(-c.points[i].y());
    }
    if (c.closed) os << " Z";
    os << "\"><title>" << escape(c.label) << "</title></path>\n";
  }
  for (const auto& m : markers) {
    os << "  <circle class=\"marker\" cx=\"" << num(m.at.x()) << "\" cy=\"" << num(-m.at.y())
       << "\" r=\"" << num(dot) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
       << num(0.5 * stroke) << "\"><title>" << escape(m.label) << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace legcurve::io
