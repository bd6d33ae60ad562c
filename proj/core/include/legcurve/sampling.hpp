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

#ifndef LEGCURVE_SAMPLING_HPP_
#define LEGCURVE_SAMPLING_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "legcurve/error.hpp"

namespace legcurve {

/// Parameter interval together with the uniform grid used to sample it.
///
/// A periodic interval is sampled on [t_start, t_end) with `n_samples` nodes
/// (the closing node coincides with the first one). A non-periodic interval
/// is sampled on [t_start, t_end] with both endpoints included.
struct ParamInterval {
  double t_start = 0.0;
  double t_end = 1.0;
  int n_samples = 1024;
  bool periodic = false;

  static constexpr int kMinSamples = 16;

  /// Throws kInvalidInput unless t_start < t_end and n_samples >= 16.
  void validate() const;

  double length() const { return t_end - t_start; }
  double step() const {
    return periodic ? length() / n_samples : length() / (n_samples - 1);
  }
  double node(int i) const { return t_start + i * step(); }
  std::vector<double> grid() const;

  /// Same interval, different sample count.
  ParamInterval with_samples(int n) const;
};

/// Finite-difference weights for the `order`-th derivative at offset 0 using
/// integer node offsets (Fornberg's recursion). Result has one weight per
/// offset, in units of h^-order.
std::vector<double> fd_weights(std::span<const int> offsets, int order);

namespace detail {

// Precomputed 4th-order stencils for one derivative order on n nodes.
struct StencilSet {
  struct Stencil {
    int first = 0;  // offset of the first node relative to the target
    std::vector<double> weights;
  };
  Stencil central;
  std::vector<Stencil> left;   // stencils for nodes 0..left.size()-1
  std::vector<Stencil> right;  // stencils for nodes n-right.size()..n-1
};

StencilSet make_stencils(int order);

}  // namespace detail

/// 4th-order accurate derivative of uniformly spaced samples. Central
/// stencils everywhere when periodic; otherwise one-sided stencils near the
/// two ends. T is double or Vec2.
template <class T>
std::vector<T> differentiate(std::span<const T> f, double h, int order,
                             bool periodic) {
  const int n = static_cast<int>(f.size());
  if (order < 1 || order > 3) {
    fail(ErrorCode::kInvalidInput, "derivative order must be 1, 2 or 3");
  }
  if (n < 8) fail(ErrorCode::kInvalidInput, "too few samples to difference");
  const detail::StencilSet st = detail::make_stencils(order);
  const double scale = 1.0 / std::pow(h, order);
  auto apply = [&](int i, const detail::StencilSet::Stencil& s) {
    T acc{};
    for (std::size_t k = 0; k < s.weights.size(); ++k) {
      int j = i + s.first + static_cast<int>(k);
      if (periodic) j = ((j % n) + n) % n;
      acc = acc + f[static_cast<std::size_t>(j)] * s.weights[k];
    }
    return acc * scale;
  };
  std::vector<T> out(f.size());
  const int nl = static_cast<int>(st.left.size());
  const int nr = static_cast<int>(st.right.size());
  for (int i = 0; i < n; ++i) {
    if (!periodic && i < nl) {
      out[i] = apply(i, st.left[i]);
    } else if (!periodic && i >= n - nr) {
      out[i] = apply(i, st.right[i - (n - nr)]);
    } else {
      out[i] = apply(i, st.central);
    }
  }
  return out;
}

/// Cubic (4-point Lagrange) interpolation of uniformly spaced samples
/// starting at `t0` with spacing `h`. Periodic series wrap around; otherwise
/// `t` must lie within the sampled range (up to half a step).
template <class T>
T interpolate(std::span<const T> f, double t0, double h, bool periodic,
              double t) {
  const int n = static_cast<int>(f.size());
  double u = (t - t0) / h;
  if (periodic) {
    u = std::fmod(u, static_cast<double>(n));
    if (u < 0) u += n;
  } else if (u < -0.5 || u > (n - 1) + 0.5) {
    fail(ErrorCode::kInvalidInput, "interpolation parameter outside grid");
  }
  int i = static_cast<int>(std::floor(u));
  if (!periodic) i = std::min(std::max(i, 1), n - 3);
  if (periodic && i >= n) i = n - 1;
  const double x = u - i;
  const double w[4] = {
      -x * (x - 1.0) * (x - 2.0) / 6.0,
      (x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0,
      -(x + 1.0) * x * (x - 2.0) / 2.0,
      (x + 1.0) * x * (x - 1.0) / 6.0,
  };
  T acc{};
  for (int k = 0; k < 4; ++k) {
    int j = i - 1 + k;
    if (periodic) j = ((j % n) + n) % n;
    acc = acc + f[static_cast<std::size_t>(j)] * w[k];
  }
  return acc;
}

}  // namespace legcurve

#endif  // LEGCURVE_SAMPLING_HPP_
