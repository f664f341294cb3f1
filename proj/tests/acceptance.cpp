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

// Acceptance run: one line per criterion. Plain-double oracles below are
// written against closed forms and finite differences and never call the
// symbolic engine.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "symlie/determining.hpp"
#include "symlie/fixtures.hpp"
#include "symlie/models.hpp"
#include "symlie/numerics.hpp"
#include "symlie/similarity.hpp"

using namespace symlie;

namespace {

int failures = 0;

void report(const char* id, bool pass, const std::string& detail)
{
  std::printf("%s %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds(std::chrono::steady_clock::time_point since)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// -- oracle: on-shell prolonged residual of u_t = u_xx + B(x) u_x + C(x) u
// under xi = x E, phi = E, eta = -x^2 E u (E = e^{2t}), with the
// prolongation coefficients expanded by hand.
double oracleInvariance(double x, double t, double u, double ux, double uxx, double B, double Bx, double C,
                        double Cx)
{
  const double E = std::exp(2 * t);
  const double ut = uxx + B * ux + C * u;
  const double xi = x * E, eta = -x * x * E * u;
  const double etaX = -2 * x * E * u - x * x * E * ux - E * ux;
  const double etaT = -2 * x * x * E * u - x * x * E * ut - 2 * x * E * ux - 2 * E * ut;
  const double eta2X = -2 * E * u - 4 * x * E * ux - x * x * E * uxx - 2 * E * uxx;
  // Delta = u_t - u_xx - B u_x - C u.
  return xi * (-Bx * ux - Cx * u) + eta * (-C) + etaX * (-B) + etaT - eta2X;
}

double oracleInvarianceMax(const std::function<void(double, double&, double&, double&, double&)>& coeffs)
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> X(0.5, 2), T(0, 1), U(0.1, 2), D(-1, 1);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = X(rng), t = T(rng), u = U(rng), ux = D(rng), uxx = D(rng);
    double B, Bx, C, Cx;
    coeffs(x, B, Bx, C, Cx);
    const double r = oracleInvariance(x, t, u, ux, uxx, B, Bx, C, Cx);
    const double scale = std::exp(2 * t) * (1 + x * x) * (1 + std::abs(u) + std::abs(ux) + std::abs(uxx));
    worst = std::max(worst, std::abs(r) / scale);
  }
  return worst;
}

// -- oracle: the three equations for the e^{2t} operator, by central differences on
// plain-double A, B, C.
using Field = std::function<double(double, double, double)>;

std::array<double, 3> oracleSystem(const Field& A, const Field& B, const Field& C, double x, double t, double u)
{
  const double h = 1e-5;
  const auto dx = [&](const Field& F) { return (F(x + h, t, u) - F(x - h, t, u)) / (2 * h); };
  const auto dt = [&](const Field& F) { return (F(x, t + h, u) - F(x, t - h, u)) / (2 * h); };
  const auto du = [&](const Field& F) { return (F(x, t, u + h) - F(x, t, u - h)) / (2 * h); };
  const double a = A(x, t, u), b = B(x, t, u), c = C(x, t, u);
  return {dt(A) + x * dx(A) - x * x * du(A) * u,
          -dt(B) - x * dx(B) + x * x * u * du(B) - b - 2 * x + 4 * a * x,
          dt(C) * u + dx(C) * u * x - du(C) * u * u * x * x - 2 * b * x * u + 2 * x * x * u + 2 * c * u - 2 * a * u};
}

struct FamilyOracle {
  const char* id;
  std::function<double(double, double)> f, g, h;
};

double oracleFamilyMax(const FamilyOracle& fo)
{
  const auto args = [](double x, double t, double u) { return std::pair{t - std::log(x), u * std::exp(x * x / 2)}; };
  const Field A = [&](double x, double t, double u) {
    auto [a, b] = args(x, t, u);
    return fo.f(a, b);
  };
  const Field B = [&](double x, double t, double u) {
    auto [a, b] = args(x, t, u);
    return (-1 + 2 * fo.f(a, b)) * x + fo.g(a, b) / x;
  };
  const Field C = [&](double x, double t, double u) {
    auto [a, b] = args(x, t, u);
    return (-1 + fo.f(a, b)) * x * x + fo.f(a, b) + fo.g(a, b) + fo.h(a, b) / (x * x);
  };
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> X(0.5, 2), T(0, 1), U(0.1, 1);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const auto r = oracleSystem(A, B, C, X(rng), T(rng), U(rng));
    for (double v : r) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

// -- oracle: FD residual of closed-form u(x, t) for u_t = u_xx + B u_x + C u.
double oracleSolutionMax(const std::function<double(double, double)>& u, const std::function<double(double)>& B,
                         double C)
{
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> X(0.2, 3), T(0.01, 0.99);
  const double h = 1e-4;
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const double x = X(rng), t = T(rng);
    const double ut = (u(x, t + h) - u(x, t - h)) / (2 * h);
    const double ux = (u(x + h, t) - u(x - h, t)) / (2 * h);
    const double uxx = (u(x + h, t) - 2 * u(x, t) + u(x - h, t)) / (h * h);
    worst = std::max(worst, std::abs(ut - uxx - B(x) * ux - C * u(x, t)));
  }
  return worst;
}

void ac1and2()
{
  struct Case {
    const char* id;
    EvolutionPDE pde;
    std::function<void(double, double&, double&, double&, double&)> coeffs;
  };
  const Case cases[] = {
      {"AC1", fokkerPlanck(),
       [](double x, double& B, double& Bx, double& C, double& Cx) {
         B = x, Bx = 1, C = 1, Cx = 0;
       }},
      {"AC2", backwardKolmogorov(),
       [](double x, double& B, double& Bx, double& C, double& Cx) {
         B = x - 1 / x, Bx = 1 + 1 / (x * x), C = 0, Cx = 0;
       }},
  };
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const InvarianceReport r = checkInvariance(exponentialOperator(), c.pde);
    const double secs = seconds(t0);
    const double oracle = oracleInvarianceMax(c.coeffs);
    const bool pass = r.pass && r.maxResidual < 1e-9 && r.nSamples == 1000 && secs < 5.0 && oracle < 1e-12;
    report(c.id, pass,
           fmt("invariance of %s under the e^{2t} operator: max residual %.3g over %zu samples (seed %llu), "
               "%.2f s; hand-expanded oracle %.3g",
               c.pde.name.c_str(), r.maxResidual, r.nSamples, static_cast<unsigned long long>(r.seed), secs, oracle));
  }
}

void ac3()
{
  const auto zero = [](double, double) { return 0.0; };
  const FamilyOracle oracles[] = {
      {"fp", [](double, double) { return 1.0; }, zero, zero},
      {"bk", [](double, double) { return 1.0; }, [](double, double) { return -1.0; }, zero},
      {"smooth", [](double, double b) { return 1 + b / 4; }, [](double, double) { return 0.5; }, zero},
  };
  std::vector<CoefficientFamily> fams;
  for (const auto& o : oracles) fams.push_back(familyById(o.id));
  const FamilyReport rep = checkFamilySolvesSystem(fams, defaultFamilyConfig());

  bool pass = rep.pass && rep.nSamples == 500;
  std::string detail = "transcribed system at 500 samples:";
  for (std::size_t k = 0; k < rep.instances.size(); ++k) {
    const auto& i = rep.instances[k];
    const double worst = std::max({i.maxResidual[0], i.maxResidual[1], i.maxResidual[2]});
    const double oracle = oracleFamilyMax(oracles[k]);
    pass = pass && worst < 1e-8 && oracle < 1e-5;
    detail += fmt(" %s %.3g (fd oracle %.2g);", i.id.c_str(), worst, oracle);
  }
  report("AC3", pass, detail);
}

void ac4()
{
  const Expr X = var(JetCoord::x), T = var(JetCoord::t), Uv = var(JetCoord::u);
  const std::vector<Expr> xtu = {X, T, Uv};
  const auto fn = [](const char* body) { return ExprFunction::fromText(body, {"x", "t", "u"}); };

  EvolutionPDE generic;
  generic.name = "generic";
  generic.A = func("A", xtu);
  generic.B = func("B", xtu);
  generic.C = func("C", xtu);
  generic.functions = {{"A", fn("2 + x*t*u")}, {"B", fn("x^2 - t*u")}, {"C", fn("u^2 + x/(1 + t)")}};

  std::vector<EvolutionPDE> pdes{generic};
  for (const auto& f : familyRegistry()) pdes.push_back(familyPde(f));

  SamplingConfig cfg;
  cfg.domain = {{"x", {0.5, 2.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 1.0}}};
  cfg.samples = 500;
  cfg.tolerance = 1e-9;

  bool pass = true;
  int compared = 0;
  double worst = 0;
  for (const auto& p : pdes) {
    const DeterminingSystem sys = generateDeterminingSystem(exponentialOperator(), p);
    const auto fx = fixtures::operatorSixSystem(p.A, p.B, p.C);
    for (const auto& fe : fx) {
      const DeterminingEquation* e = sys.find(fe.source);
      const Expr gen = e ? e->lhs : Expr(0);
      const IdentityReport r = equalNumeric(gen, fe.normalization * fe.lhs, cfg, p.bindings());
      pass = pass && r.pass;
      worst = std::max(worst, r.maxScaledDiscrepancy);
      ++compared;
    }
    // No generated equation outside the three shared monomials.
    for (const auto& e : sys.equations)
      pass = pass && std::any_of(fx.begin(), fx.end(), [&](const auto& fe) { return fe.source == e.source; });
  }
  report("AC4", pass,
         fmt("generated vs transcribed system for the e^{2t} operator: %d coefficient pairs on %zu equations, "
             "max scaled discrepancy %.3g (tolerance 1e-9)",
             compared, pdes.size(), worst));
}

void ac5()
{
  CharOptions opt;
  opt.step = 1e-3;
  opt.sSpan = 10;
  opt.tStop = 0.5;
  const CharTrajectory tr = integrateCharacteristics(exponentialOperator(), 0, 1, 1, opt);
  // Oracle: recompute the invariants from the raw samples.
  double dz = 0, dphi = 0;
  const double phi0 = std::exp(0.5);
  for (const auto& p : tr.samples) {
    dz = std::max(dz, std::abs(p.x * std::exp(-p.t) - 1.0));
    dphi = std::max(dphi, std::abs(p.u * std::exp(p.x * p.x / 2) - phi0) / phi0);
  }
  const bool pass = !tr.truncated && tr.maxDriftZ < 1e-6 && tr.maxDriftPhi < 1e-6 && dz < 1e-6 && dphi < 1e-6;
  report("AC5", pass,
         fmt("characteristics from (0,1,1), step 1e-3, %zu points to t=%.4f: drift z %.3g, phi %.3g", tr.samples.size(),
             tr.samples.back().t, std::max(dz, tr.maxDriftZ), std::max(dphi, tr.maxDriftPhi)));
}

void ac6()
{
  const std::string d1 = reduce(1, 0, 0).toString(), d2 = reduce(1, -1, 0).toString();
  const Expr k1 = named("k1"), k2 = named("k2"), z = var(JetCoord::x);
  const Expr s1 = solveReducedAnalytic(reduce(1, 0, 0), k1, k2);
  const Expr s2 = solveReducedAnalytic(reduce(1, -1, 0), k1, k2);
  // Same two-parameter family as k1*z + k2; constants are attached to the
  // indicial roots in ascending order, which swaps the labels here.
  const bool fam1 = s1 == k1 + k2 * z && substituteNamed(s1, {{"k1", k2}, {"k2", k1}}) == k1 * z + k2;
  const bool fam2 = s2 == k1 + k2 * pow(z, 2);

  // Oracle: numeric RK4 from the analytic initial data.
  double worst = 0;
  for (const auto& [ode, sol] : {std::pair{reduce(1, 0, 0), s1}, std::pair{reduce(1, -1, 0), s2}}) {
    const Expr bound = substituteNamed(sol, {{"k1", Rational(3, 2)}, {"k2", Rational(-7, 10)}});
    Assignment a;
    a.set(JetCoord::x, 1.0);
    const auto num = solveReducedNumeric(ode, 1, eval(bound, a), eval(diffPartial(bound, JetCoord::x), a), 3, 1e-3);
    for (const auto& p : num) {
      a.set(JetCoord::x, p.z);
      worst = std::max(worst, std::abs(p.phi - eval(bound, a)));
    }
  }
  const bool pass = d1 == "phi'' = 0" && d2 == "z*phi'' - phi' = 0" && fam1 && fam2 && worst < 1e-6;
  report("AC6", pass,
         fmt("reduce(1,0,0) -> \"%s\", reduce(1,-1,0) -> \"%s\"; profiles %s (= k1*z + k2 with k1<->k2) and %s; "
             "numeric agreement on [1,3] %.3g",
             d1.c_str(), d2.c_str(), profileToString(s1).c_str(), profileToString(s2).c_str(), worst));
}

void ac7()
{
  const AnalyticSolution fp = analyticFP(1, 1), bk = analyticBK(1, 1);
  const double ofp = oracleSolutionMax(
      [](double x, double t) { return x * std::exp(-t) * std::exp(-x * x / 2) + std::exp(-x * x / 2); },
      [](double x) { return x; }, 1.0);
  const double obk = oracleSolutionMax(
      [](double x, double t) { return std::exp(-x * x / 2) * (1 + x * x * std::exp(-2 * t)); },
      [](double x) { return x - 1 / x; }, 0.0);

  const SimilarityMap m = SimilarityMap::standard();
  Assignment cf, cb;
  cf.setConstant("c1", 1).setConstant("c2", 0);
  cb.setConstant("c3", 0).setConstant("c4", 1);
  const PushForwardReport pf = pushForward(analyticFP(1, 0).u, m, defaultPushForwardConfig(), cf);
  const PushForwardReport pb = pushForward(analyticBK(0, 1).u, m, defaultPushForwardConfig(), cb);
  const Expr z = var(JetCoord::x);
  const bool profiles = pf.profile == named("c1") * z + named("c2") &&
                        pb.profile == named("c3") + named("c4") * pow(z, 2);

  // Oracle: phi at two points sharing z for the c1 = 1, c2 = 0 solution.
  const auto phiFp = [](double x, double t) { return x * std::exp(-t); };
  const double spreadOracle = std::abs(phiFp(1.2, 0.0) - phiFp(1.2 * std::exp(0.7), 0.7));

  const bool pass = fp.verification.pass && bk.verification.pass && fp.verification.maxResidual < 1e-10 &&
                    bk.verification.maxResidual < 1e-10 && fp.verification.nSamples == 500 &&
                    bk.verification.nSamples == 500 && profiles && pf.spread < 1e-10 && pb.spread < 1e-10 &&
                    ofp < 1e-5 && obk < 1e-5 && spreadOracle < 1e-12;
  report("AC7", pass,
         fmt("closed-form residuals %.3g (FP) and %.3g (BK) at 500 samples, fd oracle %.2g/%.2g; profiles \"%s\", "
             "\"%s\" with spread %.3g/%.3g",
             fp.verification.maxResidual, bk.verification.maxResidual, ofp, obk,
             profileToString(pf.profile).c_str(), profileToString(pb.profile).c_str(), pf.spread, pb.spread));
}

void ac8()
{
  const auto t0 = std::chrono::steady_clock::now();
  const Grid fine{0.2, 3.0, 399, 1.0, 400};
  const Grid base{0.2, 3.0, 49, 1.0, 50};
  const AnalyticSolution fp = analyticFP(1, 1), bk = analyticBK(1, 1);
  const double efp = compare(solveFD(fokkerPlanck(), boundaryFrom(fp, fine.xMin, fine.xMax), fine), fp).maxNorm;
  const double ebk =
      compare(solveFD(backwardKolmogorov(), boundaryFrom(bk, fine.xMin, fine.xMax), fine), bk).maxNorm;
  const ConvergenceReport cf = convergenceStudy(fokkerPlanck(), fp, base, 4);
  const ConvergenceReport cb = convergenceStudy(backwardKolmogorov(), bk, base, 4);
  const double secs = seconds(t0);

  bool ratiosOk = cf.ratios.size() == 3 && cb.ratios.size() == 3;
  std::string rs;
  for (const auto* c : {&cf, &cb})
    for (double r : c->ratios) {
      ratiosOk = ratiosOk && r >= 3.2 && r <= 4.8;
      rs += fmt(" %.3f", r);
    }
  const bool pass = efp < 1e-4 && ebk < 1e-4 && ratiosOk && secs < 60.0;
  report("AC8", pass,
         fmt("Crank-Nicolson nx=nt=400: max-norm %.3g (FP), %.3g (BK); ratios over 3 halvings (FP, BK):%s; %.2f s", efp,
             ebk, rs.c_str(), secs));
}

void ac9()
{
  const InvarianceReport r = checkInvariance(SymmetryOperator(1, 0, 0), fokkerPlanck());
  AnalyticSolution bad{"perturbed", exp(-pow(var(JetCoord::x), 2) / 2) * pow(var(JetCoord::x), 2), {}, "", {}};
  const ResidualReport v = verifySolution(fokkerPlanck(), bad);
  // Oracle: translation residual is -u_x, so its maximum over u_x in [-1, 1]
  // approaches 1; the perturbed residual is (2 - 2x^2) e^{-x^2/2} up to sign.
  const double oracleBad = std::abs((2 - 2 * 0.5 * 0.5) * std::exp(-0.125));
  const bool pass = !r.pass && r.maxResidual > 0.5 && !v.pass && v.maxResidual > 0.1;
  report("AC9", pass,
         fmt("negative controls: translation on FP fails with max residual %.3g (expected near 1); perturbed "
             "x^2 e^{-x^2/2} fails with residual %.3g (hand value at x=0.5: %.3g)",
             r.maxResidual, v.maxResidual, oracleBad));
}

}  // namespace

int main()
{
  const auto steps = {ac1and2, ac3, ac4, ac5, ac6, ac7, ac8, ac9};
  for (auto step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report("AC?", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
