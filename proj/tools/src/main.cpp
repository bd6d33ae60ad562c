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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "legcurve/error.hpp"
#include "legcurve/io/csv.hpp"
#include "legcurve/io/job.hpp"

namespace {

void print_report(const legcurve::io::RunReport& r) {
  for (const auto& c : r.checks) {
    std::printf("%s %-28s max=%-12.4g tol=%.4g\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.max_residual, c.tolerance);
  }
  for (const auto& c : r.cusps) {
    std::printf("cusp   %-6s t0=%s %s\n", c.curve.c_str(),
                legcurve::io::format_double(c.report.t0).c_str(),
                std::string(legcurve::to_string(c.report.kind)).c_str());
  }
  for (double t : r.inflections) {
    std::printf("inflection t=%s\n", legcurve::io::format_double(t).c_str());
  }
  for (const auto& [k, v] : r.metrics) std::printf("%s = %.10g\n", k.c_str(), v);
  for (const auto& n : r.notes) std::printf("note: %s\n", n.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto spec = legcurve::io::parse_job(args);
    const auto report = legcurve::io::run_job(spec);
    print_report(report);
    return report.all_pass() ? 0 : 1;
  } catch (const legcurve::io::HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const legcurve::Error& e) {
    std::cerr << "legcurve: error: " << e.what() << '\n';
    return 2;
  }
}
