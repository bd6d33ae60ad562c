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

#ifndef LEGCURVE_RESIDUAL_HPP_
#define LEGCURVE_RESIDUAL_HPP_

#include <cstddef>

namespace legcurve {

/// Outcome of a pointwise numerical check over a grid.
struct ResidualReport {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::size_t samples = 0;
};

inline ResidualReport make_report(double max_residual, double tolerance,
                                  std::size_t samples) {
  return {max_residual, tolerance, max_residual <= tolerance, samples};
}

}  // namespace legcurve

#endif  // LEGCURVE_RESIDUAL_HPP_
