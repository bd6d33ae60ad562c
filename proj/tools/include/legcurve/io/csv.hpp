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

#ifndef LEGCURVE_IO_CSV_HPP_
#define LEGCURVE_IO_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "legcurve/bertrand.hpp"
#include "legcurve/legendre.hpp"

namespace legcurve::io {

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column, or -1.
  int column(const std::string& name) const;
};

/// Comma-separated numbers under a one-line header. Blank lines are
/// skipped. Errors: kInvalidInput on ragged rows or non-numeric fields.
CsvTable parse_csv(std::istream& in, const std::string& source = "<stream>");
/// Errors: kIo when the file cannot be opened.
CsvTable read_csv(const std::string& path);

void write_csv(std::ostream& out, const CsvTable& table);

/// `t,x,y` gives a regular curve with n = J(gamma'/|gamma'|);
/// `t,x,y,nx,ny` gives a Legendre curve with the stated normal.
LegendreCurve curve_from_table(const CsvTable& table, bool periodic);
/// Positions only; requires the `t,x,y` columns.
CurveModel model_from_table(const CsvTable& table, bool periodic);

/// t,x,y,nx,ny on the curve's grid.
CsvTable curve_table(const LegendreCurve& lc);
/// t,ell,beta
CsvTable curvature_table(const CurvaturePair& cp);
/// t,x,y,nx,ny,lambda,ell_bar,beta_bar (mate position and normal)
CsvTable mate_table(const MatePair& mp);

}  // namespace legcurve::io

#endif  // LEGCURVE_IO_CSV_HPP_
