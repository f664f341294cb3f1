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

#include "symlie/models.hpp"

#include <algorithm>
#include <cmath>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

const Expr X = var(JetCoord::x);
const Expr T = var(JetCoord::t);
const Expr U = var(JetCoord::u);

Domain modelDomain() { return {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 2.0}}}; }

AnalyticSolution makeSolution(std::string name, Expr u, std::map<std::string, double> constants,
                              const EvolutionPDE& pde)
{
  AnalyticSolution s{std::move(name), std::move(u), std::move(constants), pde.name, {}};
  s.verification = verifySolution(pde, s);
  return s;
}

}  // namespace

EvolutionPDE fokkerPlanck()
{
  EvolutionPDE p;
  p.name = "fokker-planck";
  p.A = 1;
  p.B = X;
  p.C = 1;
  p.domain = modelDomain();
  return p;
}

EvolutionPDE backwardKolmogorov()
{
  EvolutionPDE p;
  p.name = "backward-kolmogorov";
  p.A = 1;
  p.B = X - 1 / X;
  p.C = 0;
  p.domain = modelDomain();
  return p;
}

SymmetryOperator exponentialOperator()
{
  const Expr e2t = exp(2 * T);
  return {X * e2t, e2t, -pow(X, 2) * e2t * U};
}

const std::vector<CoefficientFamily>& familyRegistry()
{
  static const std::vector<CoefficientFamily> reg = {
      CoefficientFamily::constant("fp", 1, 0, 0),
      CoefficientFamily::constant("bk", 1, -1, 0),
      CoefficientFamily::fromText("smooth", "1 + b/4", "1/2", "0"),
      CoefficientFamily::fromText("affine", "1 + a/10", "b/5 - 1", "a/2"),
  };
  return reg;
}

const CoefficientFamily& familyById(const std::string& id)
{
  const auto& reg = familyRegistry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CoefficientFamily& f) { return f.id == id; });
  if (it == reg.end()) throw PreconditionError("unknown family instance: " + id);
  return *it;
}

EvolutionPDE instantiateFamily(const CoefficientFamily& fam, FamilyReport* report)
{
  EvolutionPDE pde = familyPde(fam);
  FamilyReport rep = checkFamilySolvesSystem({fam}, defaultFamilyConfig());
  const bool ok = rep.pass;
  if (report) *report = std::move(rep);
  if (!ok) throw NumericalError("family instance " + fam.id + " fails the determining system check");
  return pde;
}

EvolutionPDE modelByName(const std::string& name)
{
  if (name == "fokker-planck") return fokkerPlanck();
  if (name == "backward-kolmogorov") return backwardKolmogorov();
  if (name.rfind("family:", 0) == 0) return familyPde(familyById(name.substr(7)));
  throw PreconditionError("unknown model: " + name);
}

SamplingConfig defaultSolutionConfig()
{
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}};
  cfg.samples = 500;
  cfg.tolerance = 1e-10;
  return cfg;
}

Expr solutionResidual(const EvolutionPDE& pde, const Expr& u)
{
  const Expr ux = diffPartial(u, JetCoord::x);
  const Expr uxx = diffPartial(ux, JetCoord::x);
  const auto onU = [&](const Expr& c) { return substitute(c, JetCoord::u, u); };
  return diffPartial(u, JetCoord::t) - onU(pde.A) * uxx - onU(pde.B) * ux - onU(pde.C) * u;
}

ResidualReport verifySolution(const EvolutionPDE& pde, const AnalyticSolution& sol, const SamplingConfig& cfg)
{
  const CoordMask allowed = maskOf(JetCoord::x) | maskOf(JetCoord::t);
  if ((sol.u.coords() & ~allowed).any())
    throw PreconditionError("solution may depend on x and t only: " + toString(sol.u));

  const Expr r = solutionResidual(pde, sol.u);
  Assignment base = pde.bindings();
  for (const auto& [k, v] : sol.constants) base.setConstant(k, v);

  const SampleSet s = drawSamples(cfg.domain, cfg.samples, cfg.seed);
  const auto v =
      kernels::evaluateSamples(s.size(), [&](std::size_t i) { return std::abs(eval(r, s.assignment(i, base))); });

  ResidualReport rep;
  rep.tolerance = cfg.tolerance;
  rep.seed = cfg.seed;
  rep.nSamples = s.size();
  if (!v.empty()) {
    const std::size_t w = kernels::argMax(v);
    rep.maxResidual = v[w];
    rep.worstPoint = s.point(w);
  }
  rep.pass = rep.maxResidual <= cfg.tolerance;
  return rep;
}

AnalyticSolution analyticFP(double c1, double c2)
{
  const Expr g = exp(-pow(X, 2) / 2);
  const Expr u = named("c1") * X * exp(-T) * g + named("c2") * g;
  return makeSolution("fokker-planck", u, {{"c1", c1}, {"c2", c2}}, fokkerPlanck());
}

AnalyticSolution analyticBK(double c3, double c4)
{
  const Expr u = exp(-pow(X, 2) / 2) * (named("c3") + named("c4") * pow(X, 2) * exp(-2 * T));
  return makeSolution("backward-kolmogorov", u, {{"c3", c3}, {"c4", c4}}, backwardKolmogorov());
}

}  // namespace symlie
