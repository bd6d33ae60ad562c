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
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fixtures.hpp"
#include "legcurve/bertrand.hpp"
#include "legcurve/error.hpp"

namespace legcurve {
namespace {

using testing::kPi;

ErrorCode code_of(const std::function<void()>& f, std::string* what = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (what) *what = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

double max_diff(std::span<const double> got, std::span<const double> grid,
                const std::function<double(double)>& want) {
  double m = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) m = std::max(m, std::abs(got[i] - want(grid[i])));
  return m;
}

double max_position_error(const LegendreCurve& lc, const std::function<Vec2(double)>& want) {
  double m = 0.0;
  for (double t : lc.interval().grid()) m = std::max(m, distance(lc.gamma().position(t), want(t)));
  return m;
}

MateConfig config(double theta, double tau, double lambda0 = 0.0,
                  SolveMode mode = SolveMode::kAuto) {
  return {SmoothFn::constant(theta), SmoothFn::constant(tau), lambda0, mode};
}

// Curve y = x^3 on [-1, 1]; its curvature changes sign at x = 0.
LegendreCurve cubic_graph() {
  const ParamInterval iv{-1.0, 1.0, 257, false};
  return from_regular(CurveModel::analytic(
      iv, {[](double t) { return Vec2(t, t * t * t); }, [](double t) { return Vec2(1, 3 * t * t); },
           [](double t) { return Vec2(0, 6 * t); }, [](double) { return Vec2(0, 6); }}));
}

// --- solve_lambda ---

TEST(SolveLambda, CircleEvoluteIsAlgebraic) {
  const double r = 1.5;
  const CurvaturePair cp = legendre_curvature(testing::circle(r));
  const LambdaSolution lam = solve_lambda(cp, config(0, kPi / 2, 7.0));
  EXPECT_EQ(lam.mode, SolveMode::kAlgebraic);
  EXPECT_TRUE(lam.lambda0_ignored);
  EXPECT_LE(max_diff(lam.lambda, lam.grid, [r](double) { return -r; }), 1e-12);
  EXPECT_LE(lam.max_residual(), lam.tolerance);
  EXPECT_TRUE(lam.closes);
}

TEST(SolveLambda, CircleInvoluteIsLinear) {
  const double r = 2.0;
  const CurvaturePair cp = legendre_curvature(testing::circle(r));
  for (double c : {0.0, 1.0, -0.5}) {
    const LambdaSolution lam = solve_lambda(cp, config(kPi / 2, 0, c));
    EXPECT_EQ(lam.mode, SolveMode::kOde);
    EXPECT_LE(max_diff(lam.lambda, lam.grid, [&](double t) { return -r * t + c; }), 1e-11);
    EXPECT_NEAR(lam.lambda_end, -r * 2 * kPi + c, 1e-11);
    EXPECT_FALSE(lam.closes);
  }
}

TEST(SolveLambda, CircleInvolutoidExponential) {
  const double r = 1.0;
  const CurvaturePair cp = legendre_curvature(testing::circle(r));
  for (double tau : {kPi / 4, kPi / 3, -kPi / 6}) {
    const double c = 0.1;
    const double base = r * std::cos(tau) / std::sin(tau);
    const LambdaSolution lam = solve_lambda(cp, config(kPi / 2, tau, base + c));
    double rel = 0.0;
    for (std::size_t i = 0; i < lam.grid.size(); ++i) {
      const double want = base + c * std::exp(std::tan(tau) * lam.grid[i]);
      rel = std::max(rel, std::abs(lam.lambda[i] - want) / std::abs(want));
    }
    EXPECT_LE(rel, 1e-5) << "tau " << tau;
  }
}

TEST(SolveLambda, AstroidInvolute) {
  const CurvaturePair cp = legendre_curvature(testing::astroid());
  for (double c : {0.0, 0.4}) {
    const LambdaSolution lam = solve_lambda(cp, config(kPi / 2, 0, 0.75 + c));
    EXPECT_LE(max_diff(lam.lambda, lam.grid,
                       [c](double t) { return 0.75 * std::cos(2 * t) + c; }),
              1e-8);
    EXPECT_TRUE(lam.closes);
  }
}

TEST(SolveLambda, ModeErrors) {
  const CurvaturePair cp = legendre_curvature(testing::circle());
  // tau crosses pi/2 inside the interval.
  const MateConfig mixed{SmoothFn::constant(0.0), SmoothFn::linear(0.0, 0.5), 0.0, SolveMode::kAuto};
  EXPECT_EQ(code_of([&] { solve_lambda(cp, mixed); }), ErrorCode::kUnresolvableMode);
  EXPECT_EQ(code_of([&] { solve_lambda(cp, config(kPi / 2, kPi / 3, 0, SolveMode::kAlgebraic)); }),
            ErrorCode::kUnresolvableMode);
  EXPECT_EQ(code_of([&] { solve_lambda(cp, config(0, kPi / 2, 0, SolveMode::kOde)); }),
            ErrorCode::kUnresolvableMode);
  EXPECT_EQ(solve_mode_from_name("algebraic"), SolveMode::kAlgebraic);
  EXPECT_THROW(solve_mode_from_name("implicit"), Error);
}

TEST(SolveLambda, AlgebraicDivisionBlowupListsInflections) {
  std::string what;
  const CurvaturePair cp = legendre_curvature(cubic_graph());
  EXPECT_EQ(code_of([&] { solve_lambda(cp, config(0, kPi / 2)); }, &what),
            ErrorCode::kDivisionBlowup);
  EXPECT_NE(what.find("inflection"), std::string::npos) << what;
}

TEST(SolveLambda, OverflowIsReported) {
  // tan(tau) ~ 1e5: the homogeneous solution overflows.
  const CurvaturePair cp = legendre_curvature(testing::circle());
  EXPECT_EQ(code_of([&] { solve_lambda(cp, config(kPi / 2, kPi / 2 - 1e-5, 1.0)); }),
            ErrorCode::kResidualExceeded);
}

// Halving the step of the circle involutoid cuts the error by about 16.
TEST(SolveLambda, FourthOrderConvergence) {
  const double tau = kPi / 4, c = 0.1;
  auto error_at = [&](int n) {
    const CurvaturePair cp = legendre_curvature(testing::circle(1.0, n));
    const LambdaSolution lam = solve_lambda(cp, config(kPi / 2, tau, 1.0 + c));
    double m = 0.0;
    for (std::size_t i = 0; i < lam.grid.size(); ++i) {
      m = std::max(m, std::abs(lam.lambda[i] - (1.0 + c * std::exp(lam.grid[i]))));
    }
    return m;
  };
  EXPECT_GE(error_at(256) / error_at(512), 12.0);
  EXPECT_GE(error_at(512) / error_at(1024), 12.0);
}

// --- build_mate / mate_curvature ---

TEST(BuildMate, CircleEvoluteIsCentre) {
  const MatePair mp = build_mate(testing::circle(2.0), config(0, kPi / 2));
  EXPECT_LE(max_position_error(mp.mate, [](double) { return Vec2(0, 0); }), 1e-8);
  for (double t : mp.mate.interval().grid()) {
    EXPECT_LE(distance(mp.mate.nu(t), Vec2(std::sin(t), -std::cos(t))), 1e-10);
  }
  EXPECT_TRUE(mp.direction_coincidence.pass);
  const CurvaturePair& mc = mp.mate_curvature;
  EXPECT_LE(max_diff(mc.ell(), mc.grid(), [](double) { return 1.0; }), 1e-12);
  EXPECT_LE(max_diff(mc.beta(), mc.grid(), [](double) { return 0.0; }), 1e-12);
  const ResidualReport check = verify_mate_curvature(mp);
  EXPECT_TRUE(check.pass);
  EXPECT_LE(check.max_residual, 1e-8);
}

TEST(BuildMate, AstroidEvolute) {
  const MatePair mp = build_mate(testing::astroid(), config(0, kPi / 2));
  EXPECT_LE(max_position_error(mp.mate,
                               [](double t) {
                                 const double c = std::cos(t), s = std::sin(t);
                                 return Vec2(c * c * c + 3 * c * s * s, s * s * s + 3 * c * c * s);
                               }),
            1e-12);
  EXPECT_TRUE(mp.direction_coincidence.pass);
}

TEST(BuildMate, ZeroLambdaIsIdentityWithAdvisory) {
  const LegendreCurve lc = testing::astroid();
  const MatePair mp = build_mate(lc, config(0, 0, 0.0));
  EXPECT_TRUE(mp.lambda.vanishing);
  const CurveDiscrepancy d = compare_curves(lc, mp.mate);
  EXPECT_LE(d.position, 1e-14);
  EXPECT_LE(d.normal, 1e-14);
}

TEST(BuildMate, RejectsLambdaThatDoesNotSolveTheCondition) {
  const LegendreCurve lc = testing::circle();
  const MateConfig cfg = config(kPi / 2, 0, 0.0);
  LambdaSolution lam = solve_lambda(legendre_curvature(lc), cfg);
  for (double& x : lam.lambda) x += 0.1 * std::sin(x);
  EXPECT_EQ(code_of([&] { build_mate(lc, cfg, lam); }), ErrorCode::kResidualExceeded);
}

TEST(MateCurvature, CircleInvolute) {
  const double r = 1.0, c = 1.0;
  const MatePair mp = build_mate(testing::circle(r), config(kPi / 2, 0, c));
  const CurvaturePair& mc = mp.mate_curvature;
  EXPECT_LE(max_diff(mc.ell(), mc.grid(), [](double) { return 1.0; }), 1e-12);
  EXPECT_LE(max_diff(mc.beta(), mc.grid(), [&](double t) { return -r * t + c; }), 1e-10);
  EXPECT_LE(verify_mate_curvature(mp).max_residual, 1e-6);
}

TEST(MateCurvature, EqualConstantAnglesKeepEll) {
  const CurvaturePair cp = legendre_curvature(testing::astroid());
  for (double a : {kPi / 6, -kPi / 5}) {
    const MateConfig cfg = config(a, a, 0.2);
    const LambdaSolution lam = solve_lambda(cp, cfg);
    const CurvaturePair mc = mate_curvature(cp, cfg, lam);
    for (std::size_t i = 0; i < cp.size(); ++i) EXPECT_LE(std::abs(mc.ell()[i] - cp.ell()[i]), 1e-12);
  }
}

TEST(VerifyMateCurvature, AstroidInvolute) {
  const MatePair mp = special_operator(testing::astroid(), InvoluteOp{0.75});
  const ResidualReport r = verify_mate_curvature(mp);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_residual, 1e-6);
}

// --- named operators ---

TEST(SpecialOperator, Names) {
  EXPECT_EQ(operator_name(ParallelOp{}), "parallel");
  EXPECT_EQ(operator_name(EvoluteOp{}), "evolute");
  EXPECT_EQ(operator_name(InvoluteOp{}), "involute");
  EXPECT_EQ(operator_name(EvolutoidOp{}), "evolutoid");
  EXPECT_EQ(operator_name(InvolutoidOp{}), "involutoid");
  EXPECT_EQ(operator_name(NOp{}), "nvolute");
  EXPECT_EQ(operator_name(TOp{}), "tvolute");
}

TEST(SpecialOperator, AngleConfigurations) {
  struct Case {
    SpecialOperator op;
    double theta, tau;
  };
  const double a = 0.3;
  for (const Case& c : std::vector<Case>{{ParallelOp{1.0}, 0, 0},
                                         {EvoluteOp{}, 0, kPi / 2},
                                         {InvoluteOp{}, kPi / 2, 0},
                                         {EvolutoidOp{a}, a, kPi / 2},
                                         {InvolutoidOp{a}, kPi / 2, a},
                                         {NOp{a}, a, a + kPi / 2},
                                         {TOp{a}, a + kPi / 2, a}}) {
    const MateConfig cfg = operator_config(c.op);
    EXPECT_DOUBLE_EQ(cfg.theta(0.0), c.theta) << operator_name(c.op);
    EXPECT_DOUBLE_EQ(cfg.tau(0.0), c.tau) << operator_name(c.op);
  }
  EXPECT_DOUBLE_EQ(operator_config(ParallelOp{2.5}).lambda0, 2.5);
}

TEST(SpecialOperator, CircleEvolutoid) {
  const double r = 1.5;
  for (double th : {0.0, kPi / 6, kPi / 4, 1.0}) {
    const MatePair mp = special_operator(testing::circle(r), EvolutoidOp{th});
    EXPECT_LE(max_diff(mp.lambda.lambda, mp.lambda.grid, [&](double) { return -r * std::cos(th); }),
              1e-12);
    EXPECT_LE(max_position_error(mp.mate,
                                 [&](double t) {
                                   return r * Vec2(std::cos(t) - std::cos(th) * std::cos(t + th),
                                                   std::sin(t) - std::cos(th) * std::sin(t + th));
                                 }),
              1e-12);
  }
}

TEST(SpecialOperator, CircleNvolute) {
  const double r = 1.0, c = 0.05;
  for (double th : {kPi / 3, 2.0}) {
    const double base = -r / std::cos(th);
    const MatePair mp = special_operator(testing::circle(r), NOp{th, base + c});
    double rel = 0.0;
    for (std::size_t i = 0; i < mp.lambda.grid.size(); ++i) {
      const double want = base + c * std::exp(-std::cos(th) / std::sin(th) * mp.lambda.grid[i]);
      rel = std::max(rel, std::abs(mp.lambda.lambda[i] - want) / std::abs(want));
    }
    EXPECT_LE(rel, 1e-6) << "theta " << th;
  }
}

TEST(SpecialOperator, AstroidNvoluteEndpoints) {
  const LegendreCurve lc = testing::astroid();
  const MatePair n0 = special_operator(lc, NOp{0.0});
  const MatePair ev = special_operator(lc, EvoluteOp{});
  EXPECT_LE(compare_curves(n0.mate, ev.mate).position, 1e-12);

  const MatePair n90 = special_operator(lc, NOp{kPi / 2, 0.3});
  const MatePair inv = special_operator(lc, InvoluteOp{0.3});
  EXPECT_LE(compare_curves(n90.mate, inv.mate).position, 1e-12);

  const MatePair tm90 = special_operator(lc, TOp{-kPi / 2});
  EXPECT_LE(compare_curves(tm90.mate, ev.mate).position, 1e-12);
}

TEST(SpecialOperator, AstroidEvolutoidClosedForm) {
  for (double th : {0.0, kPi / 6, kPi / 4}) {
    const MatePair mp = special_operator(testing::astroid(), EvolutoidOp{th});
    EXPECT_LE(max_position_error(mp.mate,
                                 [th](double t) {
                                   const double c = std::cos(t), s = std::sin(t);
                                   const double k = 3 * c * s * std::cos(th);
                                   return Vec2(c * c * c + k * std::sin(t - th),
                                               s * s * s + k * std::cos(t - th));
                                 }),
              1e-12);
  }
}

TEST(SpecialOperator, NormalsAndCurvatureMatchOperatorFormulas) {
  const LegendreCurve lc = testing::astroid();
  const CurvaturePair cp = legendre_curvature(lc);
  for (const SpecialOperator& op :
       std::vector<SpecialOperator>{ParallelOp{0.5}, EvoluteOp{}, InvoluteOp{0.2},
                                    EvolutoidOp{kPi / 5}, InvolutoidOp{-0.4, 0.1},
                                    NOp{kPi / 3, 0.2}, TOp{0.7, -0.1}}) {
    const MatePair mp = special_operator(lc, op);
    for (double t : mp.mate.interval().grid()) {
      EXPECT_LE(distance(mp.mate.nu(t), operator_normal(op, lc.nu(t))), 1e-12) << operator_name(op);
    }
    const CurvaturePair oc = operator_curvature(cp, op, mp.lambda);
    const CurvaturePair& mc = mp.mate_curvature;
    for (std::size_t i = 0; i < mc.size(); ++i) {
      EXPECT_NEAR(oc.ell()[i], mc.ell()[i], 1e-12) << operator_name(op);
      EXPECT_NEAR(oc.beta()[i], mc.beta()[i], 1e-9) << operator_name(op);
    }
    EXPECT_TRUE(verify_mate_curvature(mp).pass) << operator_name(op);
  }
}

TEST(SpecialOperator, EvoluteNeedsNonvanishingEll) {
  std::string what;
  EXPECT_EQ(code_of([] { special_operator(cubic_graph(), EvoluteOp{}); }, &what),
            ErrorCode::kDivisionBlowup);
  EXPECT_EQ(what.rfind("evolute", 0), 0u) << what;
}

// --- inverse and composition ---

TEST(InverseMate, SwapsAnglesAndNegatesLambda) {
  const MatePair mp = special_operator(testing::astroid(), NOp{kPi / 3});
  const MatePair back = inverse_mate(mp);
  EXPECT_DOUBLE_EQ(back.config.theta(0.0), kPi / 3 + kPi / 2);
  EXPECT_DOUBLE_EQ(back.config.tau(0.0), kPi / 3);
  for (std::size_t i = 0; i < mp.lambda.lambda.size(); ++i) {
    EXPECT_EQ(back.lambda.lambda[i], -mp.lambda.lambda[i]);
  }
}

TEST(InverseMate, RoundTripsForPairedOperators) {
  const double a = kPi / 4;
  for (const LegendreCurve& lc : {testing::circle(1.0), testing::astroid()}) {
    for (const SpecialOperator& op : std::vector<SpecialOperator>{
             InvolutoidOp{a, 0.2}, EvolutoidOp{a}, NOp{kPi / 3}, TOp{kPi / 3, 0.1}}) {
      const MatePair back = inverse_mate(special_operator(lc, op));
      const CurveDiscrepancy d = compare_curves(lc, back.mate);
      EXPECT_LE(d.position, 1e-6) << operator_name(op);
      EXPECT_LE(d.normal, 1e-8) << operator_name(op);
    }
  }
}

TEST(InverseMate, CircleEvoluteBack) {
  const LegendreCurve lc = testing::circle(2.0);
  const MatePair back = inverse_mate(special_operator(lc, EvoluteOp{}));
  EXPECT_DOUBLE_EQ(back.config.theta(0.0), kPi / 2);
  EXPECT_DOUBLE_EQ(back.config.tau(0.0), 0.0);
  const CurveDiscrepancy d = compare_curves(lc, back.mate);
  EXPECT_LE(d.position, 1e-12);
  EXPECT_LE(d.normal, 1e-12);
}

TEST(InverseMate, ParallelBackIsExact) {
  const LegendreCurve lc = testing::astroid();
  const MatePair there = special_operator(lc, ParallelOp{0.7});
  const MatePair back = special_operator(there.mate, ParallelOp{-0.7});
  EXPECT_LE(compare_curves(lc, back.mate).position, 1e-14);
}

// The evolute of the astroid's involute is the astroid again.
TEST(InverseMate, EvoluteOfInvoluteIsSource) {
  const LegendreCurve lc = testing::astroid();
  const MatePair inv = special_operator(lc, InvoluteOp{0.75 + 0.5});
  const MatePair ev = special_operator(inv.mate, EvoluteOp{});
  const CurveDiscrepancy d = compare_curves(lc, ev.mate);
  EXPECT_LE(d.position, 1e-6);
  EXPECT_LE(d.normal, 1e-8);
}

TEST(ComposeMates, OppositeParallelsGiveIdentity) {
  const LegendreCurve lc = testing::circle(2.0);
  const MatePair first = special_operator(lc, ParallelOp{0.5});
  const Composition c = compose_mates(first, special_operator(first.mate, ParallelOp{-0.5}));
  ASSERT_TRUE(std::holds_alternative<IdentityReport>(c));
  EXPECT_TRUE(std::get<IdentityReport>(c).pass);
}

TEST(ComposeMates, ParallelsAdd) {
  const LegendreCurve lc = testing::astroid();
  const MatePair first = special_operator(lc, ParallelOp{0.3});
  const Composition c = compose_mates(first, special_operator(first.mate, ParallelOp{0.45}));
  ASSERT_TRUE(std::holds_alternative<MatePair>(c));
  const MatePair& total = std::get<MatePair>(c);
  const MatePair direct = special_operator(lc, ParallelOp{0.75});
  const CurveDiscrepancy d = compare_curves(total.mate, direct.mate);
  EXPECT_LE(d.position, total.mate_tol);
  EXPECT_LE(d.normal, total.mate_tol);
  EXPECT_NEAR(total.lambda.lambda[17], 0.75, 1e-14);
}

TEST(ComposeMates, EvoluteThenMatchingInvoluteGivesIdentity) {
  const double r = 1.5;
  const MatePair ev = special_operator(testing::circle(r), EvoluteOp{});
  const Composition c = compose_mates(ev, special_operator(ev.mate, InvoluteOp{r}));
  ASSERT_TRUE(std::holds_alternative<IdentityReport>(c));
  const IdentityReport& id = std::get<IdentityReport>(c);
  EXPECT_TRUE(id.pass);
  EXPECT_LE(id.position_discrepancy, 1e-6 * 2 * r);
}

TEST(ComposeMates, ChainMismatch) {
  const LegendreCurve lc = testing::astroid();
  const MatePair a = special_operator(lc, ParallelOp{0.3});
  // Second pair does not start at the first mate.
  EXPECT_EQ(code_of([&] { compose_mates(a, special_operator(lc, ParallelOp{0.2})); }),
            ErrorCode::kChainMismatch);
  // Second pair starts at the mate but translates along mu_bar instead of nu_bar.
  EXPECT_EQ(code_of([&] { compose_mates(a, special_operator(a.mate, InvoluteOp{})); }),
            ErrorCode::kChainMismatch);
}

TEST(CheckMateRelation, DetectsMates) {
  const LegendreCurve lc = testing::astroid();
  const MatePair mp = special_operator(lc, EvolutoidOp{kPi / 6});
  const MateRelation yes = check_mate_relation(lc, mp.mate, mp.config.theta, mp.config.tau);
  EXPECT_TRUE(yes.related);
  EXPECT_LE(max_diff(yes.lambda, mp.lambda.grid,
                     [&](double t) { return mp.lambda.lambda[static_cast<std::size_t>(std::lround(t / mp.lambda.grid[1]))]; }),
            1e-9);
  const MateRelation no = check_mate_relation(lc, mp.mate, SmoothFn::constant(0.0),
                                              SmoothFn::constant(0.0));
  EXPECT_FALSE(no.related);
}

}  // namespace
}  // namespace legcurve
