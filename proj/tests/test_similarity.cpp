/* Copyright 2026 The symlie Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "symlie/errors.hpp"
#include "symlie/models.hpp"
#include "symlie/parse.hpp"
#include "symlie/similarity.hpp"

namespace symlie {
namespace {

using enum JetCoord;

const Expr X = var(x), T = var(t);
const Expr Z = X;  // profiles use x for z

TEST(SimilarityMap, ZTildeIsMinusLogZ)
{
  const SimilarityMap m = SimilarityMap::standard();
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}};
  EXPECT_TRUE(equalNumeric(m.zTildeOf, -ln(m.zOf), cfg).pass);
}

TEST(SimilarityMap, RoundTrip)
{
  const SimilarityMap m = SimilarityMap::standard();
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}};
  for (const char* p : {"x", "1 + x^2", "exp(x)/(1 + x)"}) {
    const Expr prof = parse(p);
    const Expr back = substitute(m.phiOf, u, m.reconstruct(prof));
    EXPECT_TRUE(equalNumeric(back, substitute(prof, x, m.zOf), cfg).pass) << p;
  }
}

TEST(Reduce, DisplayForms)
{
  EXPECT_EQ(reduce(1, 0, 0).toString(), "phi'' = 0");
  EXPECT_EQ(reduce(1, -1, 0).toString(), "z*phi'' - phi' = 0");
  EXPECT_EQ(reduce(2, 3, 1).toString(), "2*z^2*phi'' + 3*z*phi' + phi = 0");
  EXPECT_EQ(reduce(0.5, 0, -2).toString(), "1/2*z^2*phi'' - 2*phi = 0");
  EXPECT_THROW(reduce(0, 1, 1), PreconditionError);
}

TEST(ReducedAnalytic, PaperCases)
{
  const Expr k1 = named("k1"), k2 = named("k2");
  EXPECT_EQ(solveReducedAnalytic(reduce(1, 0, 0), k1, k2), k1 + k2 * Z);
  EXPECT_EQ(solveReducedAnalytic(reduce(1, -1, 0), k1, k2), k1 + k2 * pow(Z, 2));
  EXPECT_EQ(profileToString(solveReducedAnalytic(reduce(1, -1, 0), k1, k2)), "k1 + k2*z^2");
}

TEST(ReducedAnalytic, UnsupportedRoots)
{
  EXPECT_THROW(solveReducedAnalytic(reduce(1, 1, 0), 1, 1), UnsupportedError);
  EXPECT_THROW(solveReducedAnalytic(reduce(2, 3, 1), 1, 1), UnsupportedError);
  EXPECT_THROW(solveReducedAnalytic(reduce(1, 0, -1), 1, 1), UnsupportedError);  // roots (1 +- sqrt 5)/2
}

TEST(ReducedAnalytic, NegativeAndFractionalRoots)
{
  // f r^2 + (g - f) r + h with roots -1 and 1/2: 2 r^2 + r - 1.
  const ReducedODE ode = reduce(2, 3, -1);
  const auto [r1, r2] = indicialRoots(ode);
  EXPECT_DOUBLE_EQ(r1, -1.0);
  EXPECT_DOUBLE_EQ(r2, 0.5);
  const Expr sol = solveReducedAnalytic(ode, 3, 5);
  // Residual of the Euler equation by direct substitution.
  const Expr res = 2 * pow(Z, 2) * diffPartial(diffPartial(sol, x), x) + 3 * Z * diffPartial(sol, x) - sol;
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.5, 3.0}}};
  EXPECT_TRUE(equalNumeric(res, 0, cfg).pass);
}

TEST(ReducedNumeric, Examples)
{
  auto s = solveReducedNumeric(reduce(1, -1, 0), 1, 2, 2, 2, 1e-3);
  EXPECT_NEAR(s.back().z, 2.0, 1e-14);
  EXPECT_NEAR(s.back().phi, 5.0, 1e-6);

  s = solveReducedNumeric(reduce(1, 0, 0), 1, 1, 0, 3, 1e-2);
  for (const auto& p : s) EXPECT_NEAR(p.phi, 1.0, 1e-12);

  s = solveReducedNumeric(reduce(1, 0, 0), 1, 1, 1, 3, 1e-2);
  EXPECT_NEAR(s.back().phi, 3.0, 1e-9);

  s = solveReducedNumeric(reduce(1, -1, 0), 2, 5, 4, 1, 1e-3);  // backwards
  EXPECT_NEAR(s.back().phi, 2.0, 1e-6);

  EXPECT_THROW(solveReducedNumeric(reduce(1, 0, 0), 0, 1, 1, 1, 1e-3), PreconditionError);
}

TEST(ReducedNumeric, AgreesWithAnalytic)
{
  for (const ReducedODE& ode : {reduce(1, 0, 0), reduce(1, -1, 0), reduce(2, 3, -1)}) {
    const double k1 = 0.7, k2 = -1.3;
    const Expr sol = solveReducedAnalytic(ode, Rational(7, 10), Rational(-13, 10));
    const Expr dsol = diffPartial(sol, x);
    Assignment a;
    a.set(x, 1.0);
    const auto s = solveReducedNumeric(ode, 1, eval(sol, a), eval(dsol, a), 3, 1e-3);
    for (const auto& p : s) {
      a.set(x, p.z);
      EXPECT_NEAR(p.phi, eval(sol, a), 1e-6) << ode.toString() << " z=" << p.z;
    }
    (void)k1;
    (void)k2;
  }
}

TEST(Characteristics, InvariantsConserved)
{
  CharOptions opt;
  opt.step = 1e-3;
  opt.sSpan = 10;
  opt.tStop = 0.5;
  const CharTrajectory tr = integrateCharacteristics(exponentialOperator(), 0, 1, 1, opt);
  EXPECT_FALSE(tr.truncated);
  EXPECT_NEAR(tr.samples.back().t, 0.5, 1e-3);
  EXPECT_LT(tr.maxDriftZ, 1e-6);
  EXPECT_LT(tr.maxDriftPhi, 1e-6);

  // Independent check from the samples themselves.
  for (const CharPoint& p : tr.samples) {
    EXPECT_NEAR(p.x * std::exp(-p.t), 1.0, 1e-6);
    EXPECT_NEAR(p.u * std::exp(p.x * p.x / 2) / std::exp(0.5), 1.0, 1e-6);
  }
}

TEST(Characteristics, StepRefinementOracle)
{
  CharOptions coarse;
  coarse.step = 1e-2;
  coarse.sSpan = 0.3;
  CharOptions fine = coarse;
  fine.step = 1e-4;
  const CharTrajectory a = integrateCharacteristics(exponentialOperator(), 0, 1, 1, coarse);
  const CharTrajectory b = integrateCharacteristics(exponentialOperator(), 0, 1, 1, fine);
  EXPECT_NEAR(a.samples.back().t, b.samples.back().t, 1e-6);
  EXPECT_NEAR(a.samples.back().x, b.samples.back().x, 1e-6);
  EXPECT_NEAR(a.samples.back().u, b.samples.back().u, 1e-6);
}

TEST(Characteristics, EdgeCases)
{
  CharOptions opt;
  EXPECT_EQ(integrateCharacteristics(SymmetryOperator::zero(), 0, 1, 1, opt).samples.size(), 1u);
  EXPECT_THROW(integrateCharacteristics(exponentialOperator(), 0, 0, 1, opt), PreconditionError);
  EXPECT_THROW(integrateCharacteristics(exponentialOperator(), 0, -1, 1, opt), PreconditionError);

  opt.sSpan = 100;
  opt.tCap = 3;
  opt.step = 1e-3;
  const CharTrajectory tr = integrateCharacteristics(exponentialOperator(), 0, 1, 1, opt);
  EXPECT_TRUE(tr.truncated);
  EXPECT_LE(tr.samples.back().t, 3.0);
}

TEST(Characteristics, Csv)
{
  CharOptions opt;
  opt.sSpan = 2e-3;
  const CharTrajectory tr = integrateCharacteristics(exponentialOperator(), 0, 1, 1, opt);
  std::ostringstream os;
  tr.writeCsv(os);
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,t,x,u,z,phi");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(tr.samples.size() + 1));
}

TEST(PushForward, PaperSolutions)
{
  const SimilarityMap m = SimilarityMap::standard();
  Assignment fpConst;
  fpConst.setConstant("c1", 1).setConstant("c2", 0);
  const PushForwardReport fp = pushForward(analyticFP(1, 0).u, m, defaultPushForwardConfig(), fpConst);
  EXPECT_TRUE(fp.selfSimilar);
  EXPECT_LT(fp.spread, 1e-10);
  EXPECT_EQ(profileToString(fp.profile), "c2 + c1*z");

  Assignment bkConst;
  bkConst.setConstant("c3", 0).setConstant("c4", 1);
  const PushForwardReport bk = pushForward(analyticBK(0, 1).u, m, defaultPushForwardConfig(), bkConst);
  EXPECT_TRUE(bk.selfSimilar);
  EXPECT_LT(bk.spread, 1e-10);
  EXPECT_EQ(profileToString(bk.profile), "c3 + c4*z^2");
}

TEST(PushForward, ReconstructionReproducesSolution)
{
  const SimilarityMap m = SimilarityMap::standard();
  Assignment c;
  c.setConstant("c1", 0.4).setConstant("c2", -1.1).setConstant("c3", 2.0).setConstant("c4", 0.3);
  SamplingConfig cfg = defaultPushForwardConfig();
  cfg.tolerance = 1e-9;
  for (const Expr& u : {analyticFP(0.4, -1.1).u, analyticBK(2.0, 0.3).u}) {
    const PushForwardReport r = pushForward(u, m, defaultPushForwardConfig(), c);
    EXPECT_TRUE(equalNumeric(m.reconstruct(r.profile), u, cfg, c).pass);
  }
}

TEST(PushForward, NonSelfSimilarFlagged)
{
  const PushForwardReport r = pushForward(X, SimilarityMap::standard());
  EXPECT_FALSE(r.selfSimilar);
  EXPECT_GT(r.spread, 1e-3);
  // Two points sharing z = 1: (x, t) = (1, 0) and (e^{0.5}, 0.5).
  const double a = 1.0 * std::exp(0.5), xb = std::exp(0.5), b = xb * std::exp(xb * xb / 2);
  EXPECT_GT(std::abs(a - b), 0.1);
}

}  // namespace
}  // namespace symlie
