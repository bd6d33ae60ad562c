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

#include "legcurve/io/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "legcurve/error.hpp"

namespace legcurve::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CsvTable parse_csv(std::istream& in, const std::string& source) {
  CsvTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      std::ostringstream os;
      os << source << ":" << lineno << ": expected " << table.header.size()
         << " fields, got " << fields.size();
      fail(ErrorCode::kInvalidInput, os.str());
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        std::ostringstream os;
        os << source << ":" << lineno << ": not a number: '" << f << "'";
        fail(ErrorCode::kInvalidInput, os.str());
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) fail(ErrorCode::kInvalidInput, source + ": empty CSV");
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read CSV file '" + path + "'");
  return parse_csv(in, path);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
}

namespace {

std::vector<TimedPoint> points_of(const CsvTable& table) {
  const int ct = table.column("t"), cx = table.column("x"), cy = table.column("y");
  if (ct < 0 || cx < 0 || cy < 0) {
    fail(ErrorCode::kInvalidInput, "CSV needs columns t,x,y");
  }
  std::vector<TimedPoint> pts;
  pts.reserve(table.rows.size());
  for (const auto& r : table.rows) pts.push_back({r[ct], Vec2(r[cx], r[cy])});
  return pts;
}

}  // namespace

CurveModel model_from_table(const CsvTable& table, bool periodic) {
  return build_sampled(points_of(table), periodic);
}

LegendreCurve curve_from_table(const CsvTable& table, bool periodic) {
  const auto pts = points_of(table);
  const int nx = table.column("nx"), ny = table.column("ny");
  if ((nx < 0) != (ny < 0)) fail(ErrorCode::kInvalidInput, "CSV has only one of nx,ny");
  if (nx < 0) return from_regular(build_sampled(pts, periodic));
  std::vector<Vec2> normals;
  normals.reserve(table.rows.size());
  for (const auto& r : table.rows) normals.emplace_back(r[nx], r[ny]);
  return legendre_from_samples(pts, normals, periodic);
}

CsvTable curve_table(const LegendreCurve& lc) {
  CsvTable t{{"t", "x", "y", "nx", "ny"}, {}};
  for (double s : lc.interval().grid()) {
    const Vec2 p = lc.gamma().position(s);
    const UnitVec2 n = lc.nu(s);
    t.rows.push_back({s, p.x(), p.y(), n.x(), n.y()});
  }
  return t;
}

CsvTable curvature_table(const CurvaturePair& cp) {
  CsvTable t{{"t", "ell", "beta"}, {}};
  for (std::size_t i = 0; i < cp.size(); ++i) {
    t.rows.push_back({cp.grid()[i], cp.ell()[i], cp.beta()[i]});
  }
  return t;
}

CsvTable mate_table(const MatePair& mp) {
  CsvTable t{{"t", "x", "y", "nx", "ny", "lambda", "ell_bar", "beta_bar"}, {}};
  const auto& cp = mp.mate_curvature;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const double s = cp.grid()[i];
    const Vec2 p = mp.mate.gamma().position(s);
    const UnitVec2 n = mp.mate.nu(s);
    t.rows.push_back(
        {s, p.x(), p.y(), n.x(), n.y(), mp.lambda.lambda[i], cp.ell()[i], cp.beta()[i]});
  }
  return t;
}

}  // namespace legcurve::io
