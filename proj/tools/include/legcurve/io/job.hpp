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

#ifndef LEGCURVE_IO_JOB_HPP_
#define LEGCURVE_IO_JOB_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legcurve/bertrand.hpp"
#include "legcurve/curve_model.hpp"
#include "legcurve/legendre.hpp"

namespace legcurve::io {

enum class Command {
  kCurvature,
  kMate,
  kEvolute,
  kInvolute,
  kParallel,
  kEvolutoid,
  kInvolutoid,
  kNvolute,
  kTvolute,
  kCusps,
  kRoundtrip,
  kCheckRegular,
  kPlot,
};

std::string_view to_string(Command c);
Command command_from_name(std::string_view name);
const std::vector<Command>& all_commands();

/// `circle:r=2,w=1`, `astroid`, `csv:path/to/file.csv`. Builtins accept
/// t0=, t1= to override the parameter interval (the result is then open
/// unless periodic=1 is also given).
struct CurveSource {
  std::optional<BuiltinSpec> builtin;
  std::string csv_path;
};

CurveSource parse_curve_spec(const std::string& text, int n_samples);

/// Decimal radians or [-][k*]pi[/m], e.g. pi/2, -pi/3, 3*pi/4.
double parse_angle(std::string_view text);

struct JobSpec {
  Command command = Command::kCurvature;
  std::string curve;
  CurveSource source;
  std::optional<double> theta;
  std::optional<double> tau;
  std::optional<double> lambda0;
  double lambda_slope = 0.0;
  SolveMode mode = SolveMode::kAuto;
  int n_samples = 1024;
  /// CSV sources only: treat the samples as one period of a closed curve.
  bool periodic = false;
  std::string out;
  std::string svg;
  std::string json_report;
};

/// Thrown by parse_job for --help; carries the usage text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

/// Parse `<command> [flags]` (program name excluded). Values from a
/// `--job file.json` are overridden by flags given on the command line.
/// Errors: kInvalidInput for unknown commands, missing or superfluous
/// parameters and contradictory modes; kIo for unreadable files.
JobSpec parse_job(const std::vector<std::string>& args);

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct LabelledCusp {
  std::string curve;
  CuspReport report;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  std::vector<LabelledCusp> cusps;
  std::vector<double> inflections;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> notes;
  double wall_time = 0.0;

  bool all_pass() const;
  std::string to_json() const;
};

/// Build the curve, run the command, write the requested outputs.
/// Module errors are rethrown with the command name prefixed.
RunReport run_job(const JobSpec& spec);

}  // namespace legcurve::io

#endif  // LEGCURVE_IO_JOB_HPP_
