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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "json.hpp"
#include "legcurve/error.hpp"
#include "legcurve/io/csv.hpp"
#include "legcurve/io/job.hpp"
#include "legcurve/io/svg.hpp"

namespace legcurve::io {
namespace {

namespace fs = std::filesystem;
using legcurve::testing::kPi;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("legcurve_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

// --- parse_job ---

TEST(ParseJob, CurvatureDefaults) {
  const JobSpec s = parse_job({"curvature", "--curve", "circle:r=1"});
  EXPECT_EQ(s.command, Command::kCurvature);
  ASSERT_TRUE(s.source.builtin);
  EXPECT_EQ(s.source.builtin->kind, BuiltinKind::kCircle);
  EXPECT_EQ(s.source.builtin->param("r", 0.0), 1.0);
  EXPECT_EQ(s.n_samples, 1024);
  EXPECT_EQ(s.source.builtin->interval.n_samples, 1024);
  EXPECT_EQ(s.mode, SolveMode::kAuto);
  EXPECT_EQ(s.lambda0.value_or(0.0), 0.0);
}

TEST(ParseJob, AstroidInvoluteJob) {
  const JobSpec s =
      parse_job({"mate", "--curve", "astroid", "--theta", "pi/2", "--tau", "0", "--lambda0", "0.75"});
  EXPECT_EQ(s.command, Command::kMate);
  EXPECT_EQ(s.source.builtin->kind, BuiltinKind::kAstroid);
  EXPECT_EQ(*s.theta, kPi / 2);
  EXPECT_EQ(*s.tau, 0.0);
  EXPECT_EQ(*s.lambda0, 0.75);
}

TEST(ParseJob, AlgebraicModeNeedsVanishingCosTau) {
  EXPECT_EQ(code_of([] {
              parse_job({"mate", "--curve", "circle:r=1", "--tau", "pi/3", "--theta", "pi/2",
                         "--mode", "algebraic"});
            }),
            ErrorCode::kInvalidInput);
  EXPECT_NO_THROW(parse_job({"mate", "--curve", "circle:r=1", "--tau", "pi/2", "--theta", "0",
                             "--mode", "algebraic"}));
}

TEST(ParseJob, Errors) {
  EXPECT_EQ(code_of([] { parse_job({"spiral", "--curve", "circle"}); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"evolutoid", "--curve", "circle"}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"mate", "--curve", "circle", "--theta", "0"}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"curvature"}); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"curvature", "--curve", "csv:/nonexistent/path.csv"}); }),
            ErrorCode::kIo);
  EXPECT_EQ(code_of([] { parse_job({"curvature", "--curve", "circle:r=1:w=2"}); }),
            ErrorCode::kInvalidInput);
  // Parameter values are checked when the curve is built.
  EXPECT_EQ(code_of([] { run_job(parse_job({"curvature", "--curve", "circle:r=-1"})); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"curvature", "--curve", "circle", "--samples", "8"}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_job({"plot", "--curve", "circle"}); }), ErrorCode::kInvalidInput);
  EXPECT_THROW(parse_job({"--help"}), HelpRequested);
}

TEST(ParseAngle, Literals) {
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("pi/2"), kPi / 2);
  EXPECT_EQ(parse_angle("pi/3"), kPi / 3);
  EXPECT_EQ(parse_angle("-pi/4"), -kPi / 4);
  EXPECT_EQ(parse_angle("2*pi/3"), 2 * kPi / 3);
  EXPECT_EQ(parse_angle("0.25"), 0.25);
  EXPECT_THROW(parse_angle("pie"), Error);
  EXPECT_THROW(parse_angle("pi/0"), Error);
  EXPECT_THROW(parse_angle(""), Error);
}

TEST(ParseJob, JobFilePrecedence) {
  TempDir dir;
  const std::string job = dir.file("job.json");
  std::ofstream(job) << R"({"command": "evolutoid", "curve": "astroid", "theta": "pi/6",
                            "samples": 256})";
  const JobSpec from_file = parse_job({"--job", job});
  EXPECT_EQ(from_file.command, Command::kEvolutoid);
  EXPECT_EQ(*from_file.theta, kPi / 6);
  EXPECT_EQ(from_file.n_samples, 256);

  const JobSpec cli = parse_job({"evolutoid", "--job", job, "--theta", "pi/4"});
  EXPECT_EQ(*cli.theta, kPi / 4);
  EXPECT_EQ(cli.n_samples, 256);

  std::ofstream(job) << R"({"command": "evolutoid", "curve": "astroid", "theta": 0.5})";
  EXPECT_EQ(*parse_job({"--job", job}).theta, 0.5);

  std::ofstream(job) << R"({"command": "curvature", "curve": "astroid", "colour": "red"})";
  EXPECT_EQ(code_of([&] { parse_job({"--job", job}); }), ErrorCode::kInvalidInput);
}

// --- run_job ---

TEST(RunJob, CircleEvoluteCsvIsAtOrigin) {
  TempDir dir;
  JobSpec s = parse_job({"evolute", "--curve", "circle:r=1", "--out", dir.file("ev.csv")});
  const RunReport rep = run_job(s);
  EXPECT_TRUE(rep.all_pass());
  const CsvTable t = read_csv(dir.file("ev.csv"));
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "x", "y", "nx", "ny", "lambda", "ell_bar",
                                                "beta_bar"}));
  ASSERT_EQ(t.rows.size(), 1024u);
  for (const auto& row : t.rows) {
    EXPECT_LE(std::abs(row[1]), 1e-8);
    EXPECT_LE(std::abs(row[2]), 1e-8);
  }
}

TEST(RunJob, AstroidCuspScan) {
  TempDir dir;
  const RunReport rep = run_job(parse_job(
      {"cusps", "--curve", "astroid", "--json-report", dir.file("r.json")}));
  ASSERT_EQ(rep.cusps.size(), 4u);
  for (const auto& c : rep.cusps) EXPECT_EQ(c.report.kind, CuspKind::kCusp3_2);

  const auto j = nlohmann::json::parse(slurp(dir.file("r.json")));
  ASSERT_EQ(j["cusps"].size(), 4u);
  EXPECT_EQ(j["cusps"][0]["kind"], "cusp_3_2");
  EXPECT_TRUE(j["checks"].contains("tangency"));
  EXPECT_TRUE(j["checks"]["tangency"]["pass"].get<bool>());
  EXPECT_TRUE(j["inflections"].is_array());
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(RunJob, RoundTrip) {
  const RunReport rep = run_job(parse_job(
      {"roundtrip", "--curve", "astroid", "--theta", "pi/3", "--tau", "pi/3", "--lambda0", "0.2"}));
  EXPECT_TRUE(rep.all_pass());
  bool seen = false;
  for (const auto& [k, v] : rep.metrics) {
    if (k == "roundtrip_position_error") {
      seen = true;
      EXPECT_LE(v, 1e-6);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(RunJob, CheckRegularReportsFailure) {
  const RunReport ok = run_job(parse_job(
      {"check-regular", "--curve", "circle:r=2", "--theta", "pi/2", "--tau", "pi/2", "--lambda0", "1"}));
  EXPECT_TRUE(ok.all_pass());
  const RunReport bad = run_job(parse_job(
      {"check-regular", "--curve", "circle:r=2", "--theta", "0", "--tau", "0", "--lambda0", "1"}));
  EXPECT_FALSE(bad.all_pass());
}

TEST(RunJob, ErrorsCarryCommandName) {
  try {
    run_job(parse_job({"evolute", "--curve", "line"}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionBlowup);
    // Prefixed once even though the operator adds its own name.
    EXPECT_EQ(std::string(e.what()).rfind("evolute: ", 0), 0u) << e.what();
    EXPECT_EQ(std::string(e.what()).find("evolute: evolute"), std::string::npos) << e.what();
  }
  try {
    run_job(parse_job({"check-regular", "--curve", "astroid", "--theta", "0", "--tau", "0"}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularPoint);
    EXPECT_EQ(std::string(e.what()).rfind("check-regular:", 0), 0u) << e.what();
  }
}

TEST(RunJob, OutputsAreDeterministic) {
  TempDir dir;
  for (const char* tag : {"a", "b"}) {
    run_job(parse_job({"involute", "--curve", "astroid", "--lambda0", "0.75", "--samples", "512",
                       "--out", dir.file(std::string(tag) + ".csv"), "--svg",
                       dir.file(std::string(tag) + ".svg")}));
  }
  EXPECT_EQ(slurp(dir.file("a.csv")), slurp(dir.file("b.csv")));
  EXPECT_EQ(slurp(dir.file("a.svg")), slurp(dir.file("b.svg")));
  EXPECT_FALSE(slurp(dir.file("a.svg")).empty());
}

TEST(RunJob, ReingestedSampledCurve) {
  TempDir dir;
  const LegendreCurve exact = builtin_legendre(legcurve::testing::astroid_spec(2048));
  std::ofstream(dir.file("astroid.csv")) << [&] {
    std::ostringstream os;
    write_csv(os, curve_table(exact));
    return os.str();
  }();
  const RunReport rep =
      run_job(parse_job({"cusps", "--curve", "csv:" + dir.file("astroid.csv"), "--periodic"}));
  EXPECT_TRUE(rep.all_pass());
  ASSERT_EQ(rep.cusps.size(), 4u);
  for (const auto& c : rep.cusps) EXPECT_EQ(c.report.kind, CuspKind::kCusp3_2);
}

// --- CSV ---

TEST(Csv, ShortestRoundTripFormatting) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.0), "-2");
  EXPECT_EQ(format_double(1e-300), "1e-300");
  for (double v : {kPi, 1.0 / 3.0, -7.25e-17, 123456789.123}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Csv, ExportThenIngestReproducesPositions) {
  const LegendreCurve lc = legcurve::testing::astroid(512);
  const CsvTable t = curve_table(lc);
  std::stringstream ss;
  write_csv(ss, t);
  const CsvTable back = parse_csv(ss);
  ASSERT_EQ(back.header, t.header);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  const LegendreCurve re = curve_from_table(back, true);
  double worst = 0.0;
  for (double s : lc.interval().grid()) {
    worst = std::max(worst, distance(re.gamma().position(s), lc.gamma().position(s)));
  }
  EXPECT_LE(worst, 1e-12 * lc.diameter());
}

TEST(Csv, ParseErrorsNameTheLine) {
  std::istringstream bad("t,x,y\n0,1,2\n0.1,abc,3\n");
  try {
    parse_csv(bad, "curve.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("curve.csv:3"), std::string::npos) << e.what();
  }
  std::istringstream ragged("t,x,y\n0,1\n");
  EXPECT_THROW(parse_csv(ragged), Error);
  EXPECT_EQ(code_of([] { read_csv("/nonexistent/file.csv"); }), ErrorCode::kIo);
  CsvTable no_y{{"t", "x"}, {}};
  EXPECT_THROW(curve_from_table(no_y, false), Error);
}

TEST(Csv, CurvatureHeader) {
  const CsvTable t = curvature_table(legendre_curvature(legcurve::testing::circle()));
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "ell", "beta"}));
}

// --- SVG ---

TEST(Svg, AstroidWithEvolute) {
  const LegendreCurve lc = legcurve::testing::astroid(256);
  const MatePair ev = special_operator(lc, EvoluteOp{});
  std::vector<Polyline> curves{{"astroid", {}, true}, {"evolute", {}, true}};
  for (double t : lc.interval().grid()) {
    curves[0].points.push_back(lc.gamma().position(t));
    curves[1].points.push_back(ev.mate.gamma().position(t));
  }
  std::vector<Marker> markers;
  for (const auto& c : classify_singularities(legendre_curvature(lc))) {
    markers.push_back({lc.gamma().position(c.t0), "cusp"});
  }
  const std::string svg = render_svg(curves, markers);
  EXPECT_EQ(count(svg, "<path"), 2u);
  EXPECT_EQ(count(svg, "class=\"marker\""), 4u);
  EXPECT_EQ(svg, render_svg(curves, markers));
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
}

TEST(Svg, DegenerateCurveBecomesMarker) {
  const MatePair ev = special_operator(legcurve::testing::circle(), EvoluteOp{});
  Polyline point{"evolute", {}, false};
  for (double t : ev.mate.interval().grid()) point.points.push_back(ev.mate.gamma().position(t));
  const std::vector<Polyline> curves{point};
  const std::string svg = render_svg(curves);
  EXPECT_EQ(count(svg, "<path"), 0u);
  EXPECT_EQ(count(svg, "class=\"degenerate\""), 1u);
  EXPECT_NE(svg.find("viewBox"), std::string::npos);
}

TEST(Svg, EmptyInputRejected) {
  EXPECT_THROW(render_svg({}), Error);
}

// --- binary ---

#ifdef LEGCURVE_CLI_PATH
int run_cli(const std::string& args) {
  const std::string cmd = std::string(LEGCURVE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitStatus) {
  EXPECT_EQ(run_cli("curvature --curve circle:r=1"), 0);
  EXPECT_EQ(run_cli("check-regular --curve circle --theta 0 --tau 0 --lambda0 0.5"), 1);
  EXPECT_EQ(run_cli("mate --curve circle:r=1 --tau pi/3 --theta pi/2 --mode algebraic"), 2);
  EXPECT_EQ(run_cli("evolute --curve line"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
}
#endif

}  // namespace
}  // namespace legcurve::io
