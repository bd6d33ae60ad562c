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

#ifndef LEGCURVE_IO_SVG_HPP_
#define LEGCURVE_IO_SVG_HPP_

#include <span>
#include <string>
#include <vector>

#include "legcurve/plane.hpp"

namespace legcurve::io {

struct Polyline {
  std::string label;
  std::vector<Vec2> points;
  bool closed = false;
};

struct Marker {
  Vec2 at;
  std::string label;
};

/// Deterministic SVG: one path per polyline (a polyline with no extent is
/// drawn as a dot), circle markers on top, y axis pointing up. The view box
/// is the bounding box plus a 5% margin; a zero-extent box becomes a unit
/// box around its centre. Errors: kInvalidInput when `curves` is empty.
std::string render_svg(std::span<const Polyline> curves,
                       std::span<const Marker> markers = {});

}  // namespace legcurve::io

#endif  // LEGCURVE_IO_SVG_HPP_
