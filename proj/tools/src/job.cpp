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

#include "legcurve/io/job.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "legcurve/error.hpp"
#include "legcurve/io/csv.hpp"
#include "legcurve/io/svg.hpp"
#include "legcurve/regular_mates.hpp"
#include "legcurve/tolerances.hpp"

namespace legcurve::io {

namespace {

enum class Need { kNo, kOptional, kRequired };

struct CommandInfo {
  Command command;
  const char* name;
  const char* help;
  Need theta, tau, lambda0, mode;
};

// clang-format off
const CommandInfo kCommands[] = {
  {Command::kCurvature, "curvature", "Legendre curvature (ell, beta) of a curve",
   Need::kNo, Need::kNo, Need::kNo, Need::kNo},
  {Command::kMate, "mate", "Bertrand mate for constant angles theta, tau",
   Need::kRequired, Need::kRequired, Need::kOptional, Need::kOptional},
  {Command::kEvolute, "evolute", "Evolute (theta = 0, tau = pi/2)",
   Need::kNo, Need::kNo, Need::kNo, Need::kNo},
  {Command::kInvolute, "involute", "Involute (theta = pi/2, tau = 0), lambda(t_start) = lambda0",
   Need::kNo, Need::kNo, Need::kOptional, Need::kNo},
  {Command::kParallel, "parallel", "Parallel curve at distance lambda0",
   Need::kNo, Need::kNo, Need::kRequired, Need::kNo},
  {Command::kEvolutoid, "evolutoid", "theta-evolutoid",
   Need::kRequired, Need::kNo, Need::kNo, Need::kNo},
  {Command::kInvolutoid, "involutoid", "tau-involutoid",
   Need::kNo, Need::kRequired, Need::kOptional, Need::kNo},
  {Command::kNvolute, "nvolute", "N[theta] operator",
   Need::kRequired, Need::kNo, Need::kOptional, Need::kNo},
  {Command::kTvolute, "tvolute", "T[tau] operator",
   Need::kNo, Need::kRequired, Need::kOptional, Need::kNo},
  {Command::kCusps, "cusps", "Locate and classify singular points",
   Need::kNo, Need::kNo, Need::kNo, Need::kNo},
  {Command::kRoundtrip, "roundtrip", "Mate followed by its inverse",
   Need::kRequired, Need::kRequired, Need::kOptional, Need::kOptional},
  {Command::kCheckRegular, "check-regular",
   "Regular-curve mate conditions for lambda(s) = lambda0 + lambda_slope s",
   Need::kRequired, Need::kRequired, Need::kOptional, Need::kNo},
  {Command::kPlot, "plot", "SVG of the curve (and its mate when theta and tau are given)",
   Need::kOptional, Need::kOptional, Need::kOptional, Need::kOptional},
};
// clang-format on

const CommandInfo& info(Command c) {
  for (const auto& i : kCommands) {
    if (i.command == c) return i;
  }
  fail(ErrorCode::kInvalidInput, "unknown command");
}

double parse_number(std::string_view s, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() ||
      !std::isfinite(v)) {
    fail(ErrorCode::kInvalidInput, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(Command c) { return info(c).name; }

Command command_from_name(std::string_view name) {
  for (const auto& i : kCommands) {
    if (name == i.name) return i.command;
  }
  fail(ErrorCode::kInvalidInput, "unknown command '" + std::string(name) + "'");
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> cmds = [] {
    std::vector<Command> v;
    for (const auto& i : kCommands) v.push_back(i.command);
    return v;
  }();
  return cmds;
}

double parse_angle(std::string_view text) {
  std::string_view s = text;
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return parse_number(s, "angle");
  double sign = 1.0;
  std::string_view head = s.substr(0, pos);
  if (!head.empty() && head.front() == '-') {
    sign = -1.0;
    head.remove_prefix(1);
  }
  double k = 1.0;
  if (!head.empty()) {
    if (head.back() != '*') fail(ErrorCode::kInvalidInput, "bad angle '" + std::string(text) + "'");
    head.remove_suffix(1);
    k = parse_number(head, "angle multiplier");
  }
  std::string_view tail = s.substr(pos + 2);
  double m = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') fail(ErrorCode::kInvalidInput, "bad angle '" + std::string(text) + "'");
    tail.remove_prefix(1);
    m = parse_number(tail, "angle divisor");
    if (m == 0.0) fail(ErrorCode::kInvalidInput, "angle divisor is zero");
  }
  return sign * k * std::numbers::pi / m;
}

CurveSource parse_curve_spec(const std::string& text, int n_samples) {
  CurveSource src;
  if (text.rfind("csv:", 0) == 0) {
    src.csv_path = text.substr(4);
    if (src.csv_path.empty()) fail(ErrorCode::kInvalidInput, "csv: needs a path");
    std::ifstream probe(src.csv_path);
    if (!probe) fail(ErrorCode::kIo, "cannot read CSV file '" + src.csv_path + "'");
    return src;
  }
  const auto colon = text.find(':');
  BuiltinSpec spec;
  spec.kind = builtin_kind_from_name(text.substr(0, colon));
  std::optional<double> t0, t1;
  bool periodic_given = false, periodic = false;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        fail(ErrorCode::kInvalidInput, "expected key=value in curve spec, got '" + item + "'");
      }
      const std::string key = item.substr(0, eq);
      const double v = parse_number(std::string_view(item).substr(eq + 1), "curve parameter");
      if (key == "t0") {
        t0 = v;
      } else if (key == "t1") {
        t1 = v;
      } else if (key == "periodic") {
        periodic_given = true;
        periodic = v != 0.0;
      } else {
        spec.params[key] = v;
      }
    }
  }
  spec.interval = BuiltinSpec::default_interval(spec.kind, n_samples, spec.param("w", 1.0));
  if (t0 || t1) {
    spec.interval.t_start = t0.value_or(spec.interval.t_start);
    spec.interval.t_end = t1.value_or(spec.interval.t_end);
    spec.interval.periodic = false;
  }
  if (periodic_given) spec.interval.periodic = periodic;
  spec.interval.validate();
  src.builtin = spec;
  return src;
}

// ------------------------------------------------------------- parsing

namespace {

struct RawOptions {
  std::optional<std::string> curve, theta, tau, mode, out, svg, json_report, job;
  std::optional<double> lambda0, lambda_slope;
  std::optional<int> samples;
  std::optional<bool> periodic;
  std::optional<std::string> command;
  std::optional<double> theta_value, tau_value;
};

// Angles in a job file may be numbers or literals such as "pi/2".
void read_angle(const nlohmann::json& v, std::optional<std::string>& text,
                std::optional<double>& value) {
  if (v.is_number()) {
    value = v.get<double>();
  } else {
    text = v.get<std::string>();
  }
}

RawOptions read_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read job file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidInput, "job file '" + path + "': " + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::kInvalidInput, "job file must hold a JSON object");
  RawOptions r;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "command") r.command = v.get<std::string>();
      else if (key == "curve") r.curve = v.get<std::string>();
      else if (key == "theta") read_angle(v, r.theta, r.theta_value);
      else if (key == "tau") read_angle(v, r.tau, r.tau_value);
      else if (key == "lambda0") r.lambda0 = v.get<double>();
      else if (key == "lambda_slope") r.lambda_slope = v.get<double>();
      else if (key == "mode") r.mode = v.get<std::string>();
      else if (key == "samples" || key == "n_samples") r.samples = v.get<int>();
      else if (key == "periodic") r.periodic = v.get<bool>();
      else if (key == "out") r.out = v.get<std::string>();
      else if (key == "svg") r.svg = v.get<std::string>();
      else if (key == "json_report") r.json_report = v.get<std::string>();
      else fail(ErrorCode::kInvalidInput, "unknown job field '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidInput, "job file '" + path + "': " + e.what());
  }
  return r;
}

template <class T>
void overlay(std::optional<T>& base, const std::optional<T>& top) {
  if (top) base = top;
}

}  // namespace

JobSpec parse_job(const std::vector<std::string>& args) {
  CLI::App app{"Legendre curves, curvature pairs and Bertrand mates", "legcurve"};
  app.require_subcommand(0, 1);
  RawOptions cli;
  std::optional<std::string> top_job;
  app.add_option("--job", top_job, "JSON job file (fields as in the long options)");

  for (const auto& ci : kCommands) {
    CLI::App* sub = app.add_subcommand(ci.name, ci.help);
    sub->add_option("--curve", cli.curve, "builtin[:k=v,...] or csv:path");
    sub->add_option("--samples", cli.samples, "grid size for built-in curves (default 1024)");
    sub->add_option("--out", cli.out, "CSV output path");
    sub->add_option("--svg", cli.svg, "SVG output path");
    sub->add_option("--json-report", cli.json_report, "JSON report path");
    sub->add_option("--job", cli.job, "JSON job file");
    sub->add_flag("--periodic", cli.periodic, "CSV input is one period of a closed curve");
    if (ci.theta != Need::kNo) sub->add_option("--theta", cli.theta, "angle theta");
    if (ci.tau != Need::kNo) sub->add_option("--tau", cli.tau, "angle tau");
    if (ci.lambda0 != Need::kNo) {
      sub->add_option("--lambda0", cli.lambda0,
                      ci.command == Command::kParallel ? "distance" : "lambda at t_start");
    }
    if (ci.mode != Need::kNo) sub->add_option("--mode", cli.mode, "ode, algebraic or auto");
    if (ci.command == Command::kCheckRegular) {
      sub->add_option("--lambda-slope", cli.lambda_slope, "d lambda / ds");
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::kInvalidInput, e.what());
  }
  if (!app.get_subcommands().empty()) cli.command = app.get_subcommands().front()->get_name();
  if (!cli.job) cli.job = top_job;

  RawOptions r;
  if (cli.job) r = read_job_file(*cli.job);
  if (cli.theta) r.theta_value.reset();
  if (cli.tau) r.tau_value.reset();
  overlay(r.command, cli.command);
  overlay(r.curve, cli.curve);
  overlay(r.theta, cli.theta);
  overlay(r.tau, cli.tau);
  overlay(r.mode, cli.mode);
  overlay(r.out, cli.out);
  overlay(r.svg, cli.svg);
  overlay(r.json_report, cli.json_report);
  overlay(r.lambda0, cli.lambda0);
  overlay(r.lambda_slope, cli.lambda_slope);
  overlay(r.samples, cli.samples);
  overlay(r.periodic, cli.periodic);

  if (!r.command) fail(ErrorCode::kInvalidInput, "no command given (see --help)");
  JobSpec spec;
  spec.command = command_from_name(*r.command);
  const CommandInfo& ci = info(spec.command);
  const std::string cname = ci.name;

  spec.theta = r.theta ? std::optional(parse_angle(*r.theta)) : r.theta_value;
  spec.tau = r.tau ? std::optional(parse_angle(*r.tau)) : r.tau_value;
  spec.lambda0 = r.lambda0;

  auto check = [&](Need need, bool given, const char* flag) {
    if (need == Need::kRequired && !given) {
      fail(ErrorCode::kInvalidInput, cname + ": missing required parameter " + flag);
    }
    if (need == Need::kNo && given) {
      fail(ErrorCode::kInvalidInput, cname + " does not take " + flag);
    }
  };
  check(ci.theta, spec.theta.has_value(), "--theta");
  check(ci.tau, spec.tau.has_value(), "--tau");
  check(ci.lambda0, spec.lambda0.has_value(), "--lambda0");
  check(ci.mode, r.mode.has_value(), "--mode");
  if (r.lambda_slope) {
    if (spec.command != Command::kCheckRegular) {
      fail(ErrorCode::kInvalidInput, cname + " does not take --lambda-slope");
    }
    spec.lambda_slope = *r.lambda_slope;
  }
  if (spec.command == Command::kPlot && spec.theta.has_value() != spec.tau.has_value()) {
    fail(ErrorCode::kInvalidInput, "plot: give both --theta and --tau or neither");
  }
  if (spec.command == Command::kPlot && !spec.theta && (r.mode || spec.lambda0)) {
    fail(ErrorCode::kInvalidInput, "plot: --mode and --lambda0 need --theta and --tau");
  }

  if (r.mode) spec.mode = solve_mode_from_name(*r.mode);
  if (spec.mode != SolveMode::kAuto && spec.tau) {
    const bool zero = std::abs(std::cos(*spec.tau)) <= tol::kAngle;
    if (spec.mode == SolveMode::kAlgebraic && !zero) {
      fail(ErrorCode::kInvalidInput,
           cname + ": algebraic mode requires cos(tau) = 0 (tau = pi/2 + k pi)");
    }
    if (spec.mode == SolveMode::kOde && zero) {
      fail(ErrorCode::kInvalidInput, cname + ": ode mode requires cos(tau) != 0");
    }
  }

  if (r.samples) {
    if (*r.samples < ParamInterval::kMinSamples) {
      fail(ErrorCode::kInvalidInput, "--samples must be at least 16");
    }
    spec.n_samples = *r.samples;
  }
  if (!r.curve) fail(ErrorCode::kInvalidInput, cname + ": missing required parameter --curve");
  spec.curve = *r.curve;
  spec.source = parse_curve_spec(spec.curve, spec.n_samples);
  spec.periodic = r.periodic.value_or(false);
  if (spec.periodic && spec.source.builtin) {
    fail(ErrorCode::kInvalidInput, "--periodic applies to CSV input only");
  }
  if (r.samples && !spec.source.builtin) {
    fail(ErrorCode::kInvalidInput, "--samples applies to built-in curves only");
  }
  spec.out = r.out.value_or("");
  spec.svg = r.svg.value_or("");
  spec.json_report = r.json_report.value_or("");
  if (spec.command == Command::kPlot && spec.svg.empty()) {
    fail(ErrorCode::kInvalidInput, "plot: missing required parameter --svg");
  }
  return spec;
}

// ------------------------------------------------------------- running

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json cj = nlohmann::ordered_json::object();
  for (const auto& c : checks) {
    cj[c.name] = {{"max_residual", c.max_residual}, {"tolerance", c.tolerance}, {"pass", c.pass}};
  }
  j["checks"] = cj;
  nlohmann::ordered_json cusp_list = nlohmann::ordered_json::array();
  for (const auto& c : cusps) {
    cusp_list.push_back({{"curve", c.curve},
                         {"t0", c.report.t0},
                         {"kind", std::string(legcurve::to_string(c.report.kind))}});
  }
  j["cusps"] = cusp_list;
  j["inflections"] = inflections;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metrics) m[k] = v;
  j["metrics"] = m;
  j["notes"] = notes;
  j["pass"] = all_pass();
  j["wall_time_s"] = wall_time;
  return j.dump(2) + "\n";
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string csv_text(const CsvTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

LegendreCurve load_legendre(const JobSpec& spec) {
  if (spec.source.builtin) return builtin_legendre(*spec.source.builtin);
  return curve_from_table(read_csv(spec.source.csv_path), spec.periodic);
}

CurveModel load_model(const JobSpec& spec) {
  if (spec.source.builtin) return build_builtin(*spec.source.builtin);
  return model_from_table(read_csv(spec.source.csv_path), spec.periodic);
}

Polyline polyline(const LegendreCurve& lc, const std::string& label) {
  Polyline p{label, {}, lc.interval().periodic};
  for (double t : lc.interval().grid()) p.points.push_back(lc.gamma().position(t));
  return p;
}

std::optional<SpecialOperator> named_operator(const JobSpec& s) {
  const double l0 = s.lambda0.value_or(0.0);
  switch (s.command) {
    case Command::kEvolute: return EvoluteOp{};
    case Command::kInvolute: return InvoluteOp{l0};
    case Command::kParallel: return ParallelOp{l0};
    case Command::kEvolutoid: return EvolutoidOp{*s.theta};
    case Command::kInvolutoid: return InvolutoidOp{*s.tau, l0};
    case Command::kNvolute: return NOp{*s.theta, l0};
    case Command::kTvolute: return TOp{*s.tau, l0};
    default: return std::nullopt;
  }
}

MateConfig general_config(const JobSpec& s) {
  return {SmoothFn::constant(*s.theta), SmoothFn::constant(*s.tau), s.lambda0.value_or(0.0),
          s.mode};
}

class Runner {
 public:
  explicit Runner(const JobSpec& spec) : spec_(spec) { report_.command = std::string(to_string(spec.command)); }

  RunReport run() {
    switch (spec_.command) {
      case Command::kCurvature: curvature(); break;
      case Command::kCusps: cusps(); break;
      case Command::kRoundtrip: roundtrip(); break;
      case Command::kCheckRegular: check_regular(); break;
      case Command::kPlot: plot(); break;
      default: mate(); break;
    }
    return std::move(report_);
  }

 private:
  void add(const std::string& name, double value, double tol, std::optional<bool> pass = {}) {
    report_.checks.push_back({name, value, tol, pass.value_or(value <= tol)});
  }
  void metric(const std::string& name, double v) { report_.metrics.emplace_back(name, v); }

  void scan(const std::string& label, const CurvaturePair& cp, const LegendreCurve& lc,
            std::vector<Marker>* markers) {
    for (const auto& r : classify_singularities(cp)) {
      report_.cusps.push_back({label, r});
      if (markers) {
        markers->push_back({lc.gamma().position(r.t0),
                            label + " " + std::string(legcurve::to_string(r.kind))});
      }
    }
  }

  void curve_checks(const LegendreCurve& lc, const CurvaturePair& cp) {
    add("tangency", lc.tangency_residual(), lc.leg_tol());
    const auto fc = frenet_closure(lc, cp);
    add("frenet_closure", fc.max_residual, fc.tolerance);
    try {
      const auto rel = check_ell_kappa_relation(lc, cp);
      add("ell_kappa_relation", rel.max_residual, rel.tolerance);
    } catch (const Error& e) {
      report_.notes.push_back(std::string("ell_kappa_relation skipped: ") + e.what());
    }
  }

  void curvature() {
    const LegendreCurve lc = load_legendre(spec_);
    const CurvaturePair cp = legendre_curvature(lc);
    curve_checks(lc, cp);
    std::vector<Marker> markers;
    scan("source", cp, lc, &markers);
    report_.inflections = inflection_points(cp);
    metric("max_abs_ell", cp.max_abs_ell());
    metric("max_abs_beta", cp.max_abs_beta());
    if (!spec_.out.empty()) write_file(spec_.out, csv_text(curvature_table(cp)));
    if (!spec_.svg.empty()) {
      const std::vector<Polyline> curves{polyline(lc, "source")};
      write_file(spec_.svg, render_svg(curves, markers));
    }
  }

  void cusps() {
    const LegendreCurve lc = load_legendre(spec_);
    const CurvaturePair cp = legendre_curvature(lc);
    add("tangency", lc.tangency_residual(), lc.leg_tol());
    std::vector<Marker> markers;
    scan("source", cp, lc, &markers);
    report_.inflections = inflection_points(cp);
    metric("singular_events", static_cast<double>(report_.cusps.size()));
    if (!spec_.out.empty()) {
      std::ostringstream os;
      os << "t0,kind,beta,beta_d1,beta_d2,ell,ell_d1,ell_d2\n";
      for (const auto& c : report_.cusps) {
        const auto& w = c.report.witness;
        os << format_double(c.report.t0) << ',' << legcurve::to_string(c.report.kind);
        for (double v : {w.beta, w.beta_d1, w.beta_d2, w.ell, w.ell_d1, w.ell_d2}) {
          os << ',' << format_double(v);
        }
        os << '\n';
      }
      write_file(spec_.out, os.str());
    }
    if (!spec_.svg.empty()) {
      const std::vector<Polyline> curves{polyline(lc, "source")};
      write_file(spec_.svg, render_svg(curves, markers));
    }
  }

  void mate_checks(const MatePair& mp, const std::optional<SpecialOperator>& op) {
    add("lambda_residual", mp.lambda.max_residual(), mp.lambda.tolerance);
    add("direction_coincidence", mp.direction_coincidence.max_residual,
        mp.direction_coincidence.tolerance);
    add("mate_tangency", mp.mate.tangency_residual(), mp.mate.leg_tol());
    const auto vc = verify_mate_curvature(mp);
    add("mate_curvature_cross_check", vc.max_residual, vc.tolerance);
    if (op) {
      const auto cp = legendre_curvature(mp.source);
      const auto oc = operator_curvature(cp, *op, mp.lambda);
      const double scale = std::max(1.0, mp.mate_curvature.max_abs_beta());
      double worst = 0.0;
      for (std::size_t i = 0; i < oc.size(); ++i) {
        worst = std::max(worst, std::abs(oc.beta()[i] - mp.mate_curvature.beta()[i]) / scale);
        worst = std::max(worst, std::abs(oc.ell()[i] - mp.mate_curvature.ell()[i]));
      }
      add("operator_curvature", worst, tol::kCross);
      double nworst = 0.0;
      for (double t : mp.source.interval().grid()) {
        nworst = std::max(nworst, distance(mp.mate.nu(t), operator_normal(*op, mp.source.nu(t))));
      }
      add("operator_normal", nworst, mp.mate_tol);
    }
    if (mp.lambda.lambda0_ignored) report_.notes.push_back("lambda0 is ignored in algebraic mode");
    if (mp.lambda.vanishing) {
      report_.notes.push_back("lambda vanishes identically: the mate coincides with the source");
    }
    metric("lambda_min", *std::min_element(mp.lambda.lambda.begin(), mp.lambda.lambda.end()));
    metric("lambda_max", *std::max_element(mp.lambda.lambda.begin(), mp.lambda.lambda.end()));
    metric("rk4_substeps", mp.lambda.substeps);
    report_.notes.push_back(std::string("solve mode: ") + std::string(to_string(mp.lambda.mode)));
  }

  void mate_scan(const MatePair& mp, std::vector<Marker>& markers) {
    const CurvaturePair cp = legendre_curvature(mp.source);
    scan("source", cp, mp.source, &markers);
    report_.inflections = inflection_points(cp);
    if (mp.mate_curvature.max_abs_beta() <= tol::sing_tol(cp.max_abs_beta())) {
      report_.notes.push_back("mate has beta = 0 throughout: it collapses to a point");
    } else {
      scan("mate", mp.mate_curvature, mp.mate, &markers);
    }
  }

  void mate() {
    const LegendreCurve lc = load_legendre(spec_);
    const auto op = named_operator(spec_);
    const MatePair mp = op ? special_operator(lc, *op) : build_mate(lc, general_config(spec_));
    mate_checks(mp, op);
    std::vector<Marker> markers;
    mate_scan(mp, markers);
    if (!spec_.out.empty()) write_file(spec_.out, csv_text(mate_table(mp)));
    if (!spec_.svg.empty()) {
      const std::vector<Polyline> curves{polyline(lc, "source"),
                                         polyline(mp.mate, std::string(to_string(spec_.command)))};
      write_file(spec_.svg, render_svg(curves, markers));
    }
  }

  void roundtrip() {
    const LegendreCurve lc = load_legendre(spec_);
    const MatePair mp = build_mate(lc, general_config(spec_));
    add("lambda_residual", mp.lambda.max_residual(), mp.lambda.tolerance);
    add("direction_coincidence", mp.direction_coincidence.max_residual,
        mp.direction_coincidence.tolerance);
    const MatePair back = inverse_mate(mp);
    add("inverse_lambda_residual", back.lambda.max_residual(), back.lambda.tolerance);
    const CurveDiscrepancy d = compare_curves(back.mate, lc);
    add("roundtrip_position", d.position, mp.mate_tol);
    add("roundtrip_normal", d.normal, mp.mate_tol);
    metric("roundtrip_position_error", d.position);
    metric("roundtrip_normal_error", d.normal);
    if (!spec_.out.empty()) write_file(spec_.out, csv_text(curve_table(back.mate)));
    if (!spec_.svg.empty()) {
      const std::vector<Polyline> curves{polyline(lc, "source"), polyline(mp.mate, "mate"),
                                         polyline(back.mate, "recovered")};
      write_file(spec_.svg, render_svg(curves));
    }
  }

  void check_regular() {
    const CurveModel c = load_model(spec_);
    const double l0 = spec_.lambda0.value_or(0.0);
    const auto rep = check_regular_bertrand(c, SmoothFn::constant(*spec_.theta),
                                            SmoothFn::constant(*spec_.tau),
                                            SmoothFn::linear(l0, spec_.lambda_slope, 0.0));
    add("cond1", rep.max_cond1(), rep.cond1_tolerance);
    add("cond2_nonzero", rep.min_abs_cond2(), rep.reg_tol, rep.min_abs_cond2() > rep.reg_tol);
    add("regular_mate", rep.is_mate ? 1.0 : 0.0, 1.0, rep.is_mate);
    metric("cond2_min_abs", rep.min_abs_cond2());
    if (!rep.mate_curvature.empty()) {
      metric("mate_curvature_min",
             *std::min_element(rep.mate_curvature.begin(), rep.mate_curvature.end()));
      metric("mate_curvature_max",
             *std::max_element(rep.mate_curvature.begin(), rep.mate_curvature.end()));
    }
    if (!spec_.out.empty()) {
      CsvTable t{{"s", "kappa", "cond1", "cond2", "kappa_bar"}, {}};
      for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        t.rows.push_back({rep.grid[i], rep.kappa[i], rep.cond1_residual[i], rep.cond2_value[i],
                          rep.mate_curvature.empty() ? 0.0 : rep.mate_curvature[i]});
      }
      write_file(spec_.out, csv_text(t));
    }
  }

  void plot() {
    const LegendreCurve lc = load_legendre(spec_);
    add("tangency", lc.tangency_residual(), lc.leg_tol());
    std::vector<Polyline> curves{polyline(lc, "source")};
    std::vector<Marker> markers;
    if (spec_.theta) {
      const MatePair mp = build_mate(lc, general_config(spec_));
      mate_checks(mp, std::nullopt);
      mate_scan(mp, markers);
      curves.push_back(polyline(mp.mate, "mate"));
      if (!spec_.out.empty()) write_file(spec_.out, csv_text(mate_table(mp)));
    } else {
      const CurvaturePair cp = legendre_curvature(lc);
      scan("source", cp, lc, &markers);
      report_.inflections = inflection_points(cp);
      if (!spec_.out.empty()) write_file(spec_.out, csv_text(curve_table(lc)));
    }
    write_file(spec_.svg, render_svg(curves, markers));
  }

  const JobSpec& spec_;
  RunReport report_;
};

}  // namespace

RunReport run_job(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = Runner(spec).run();
  } catch (const Error& e) {
    const std::string prefix = std::string(to_string(spec.command)) + ": ";
    const std::string what = e.what();
    fail(e.code(), what.rfind(prefix, 0) == 0 ? what : prefix + what);
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!spec.json_report.empty()) write_file(spec.json_report, report.to_json());
  return report;
}

}  // namespace legcurve::io
