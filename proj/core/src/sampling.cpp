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

#include "legcurve/sampling.hpp"

#include <sstream>

namespace legcurve {

void ParamInterval::validate() const {
  if (!(std::isfinite(t_start) && std::isfinite(t_end)) || !(t_start < t_end)) {
    std::ostringstream os;
    os << "parameter interval [" << t_start << ", " << t_end << "] is empty";
    fail(ErrorCode::kInvalidInput, os.str());
  }
  if (n_samples < kMinSamples) {
    std::ostringstream os;
    os << "need at least " << kMinSamples << " samples, got " << n_samples;
    fail(ErrorCode::kInvalidInput, os.str());
  }
}

std::vector<double> ParamInterval::grid() const {
  std::vector<double> g(static_cast<std::size_t>(n_samples));
  const double h = step();
  for (int i = 0; i < n_samples; ++i) g[i] = t_start + i * h;
  if (!periodic) g.back() = t_end;
  return g;
}

ParamInterval ParamInterval::with_samples(int n) const {
  ParamInterval copy = *this;
  copy.n_samples = n;
  return copy;
}

std::vector<double> fd_weights(std::span<const int> offsets, int order) {
  const int n = static_cast<int>(offsets.size());
  // c[i][k]: weight of node i for derivative k.
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = static_cast<double>(offsets[i] - offsets[j]);
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

namespace detail {

StencilSet make_stencils(int order) {
  // Central width keeps 4th order: 5 points for d1, d2 and 7 for d3.
  const int half = order == 3 ? 3 : 2;
  // One-sided windows need order + 4 points for 4th order.
  const int width = order + 4;
  StencilSet st;
  auto build = [&](int first, int count) {
    std::vector<int> offs(count);
    for (int k = 0; k < count; ++k) offs[k] = first + k;
    return StencilSet::Stencil{first, fd_weights(offs, order)};
  };
  st.central = build(-half, 2 * half + 1);
  for (int i = 0; i < half; ++i) st.left.push_back(build(-i, width));
  for (int r = half; r >= 1; --r) {
    // Node n - r has r - 1 nodes to its right.
    st.right.push_back(build((r - 1) - (width - 1), width));
  }
  return st;
}

}  // namespace detail

}  // namespace legcurve
