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

#include "symlie/determining.hpp"

#include <algorithm>
#include <cmath>

#include "symlie/errors.hpp"
#include "symlie/fixtures.hpp"
#include "symlie/models.hpp"

namespace symlie {

namespace {

constexpr std::array<JetCoord, 3> kMonomialCoords = {JetCoord::u_x, JetCoord::u_xx, JetCoord::u_xxx};

const CoordMask kMonomialMask = maskOf(JetCoord::u_x) | maskOf(JetCoord::u_xx) | maskOf(JetCoord::u_xxx);
const CoordMask kOffShellMask = maskOf(JetCoord::u_t) | maskOf(JetCoord::u_xt) | maskOf(JetCoord::u_tt);

int monomialSlot(const Expr& e)
{
  if (e.kind() != Kind::Var) return -1;
  for (std::size_t k = 0; k < kMonomialCoords.size(); ++k)
    if (e.node().coord == kMonomialCoords[k]) return static_cast<int>(k);
  return -1;
}

// Splits one expanded term into monomial and coefficient.
std::pair<Monomial, Expr> splitTerm(const Expr& term)
{
  if (term.kind() == Kind::Neg) {
    auto [m, c] = splitTerm(term.children()[0]);
    return {m, -c};
  }
  const std::vector<Expr> single{term};
  const auto& factors = term.kind() == Kind::Product ? term.children() : single;

  Monomial m;
  std::vector<Expr> rest;
  for (const Expr& f : factors) {
    if ((f.coords() & kMonomialMask).none()) {
      rest.push_back(f);
      continue;
    }
    if (int k = monomialSlot(f); k >= 0) {
      ++m.powers[k];
      continue;
    }
    if (f.kind() == Kind::Power) {
      const Rational& q = f.node().value;
      const int k = monomialSlot(f.children()[0]);
      if (k >= 0 && q.den() == 1 && q.num() > 0) {
        m.powers[k] += static_cast<int>(q.num());
        continue;
      }
    }
    throw NonPolynomialError("not polynomial in u_x, u_xx, u_xxx: " + toString(f));
  }
  return {m, product(std::move(rest))};
}

std::vector<Expr> termsOf(const Expr& e)
{
  if (e.isZero()) return {};
  if (e.kind() == Kind::Sum) return e.children();
  return {e};
}

}  // namespace

Expr Monomial::toExpr() const
{
  std::vector<Expr> f;
  for (std::size_t k = 0; k < kMonomialCoords.size(); ++k)
    if (powers[k] > 0) f.push_back(pow(var(kMonomialCoords[k]), powers[k]));
  return product(std::move(f));
}

std::string Monomial::toString() const { return symlie::toString(toExpr()); }

Monomial operator*(const Monomial& a, const Monomial& b)
{
  Monomial m;
  for (std::size_t k = 0; k < 3; ++k) m.powers[k] = a.powers[k] + b.powers[k];
  return m;
}

const DeterminingEquation* DeterminingSystem::find(const Monomial& m) const
{
  auto it = std::lower_bound(equations.begin(), equations.end(), m,
                             [](const DeterminingEquation& e, const Monomial& k) { return e.source < k; });
  return it != equations.end() && it->source == m ? &*it : nullptr;
}

Expr onShellSubstitute(const Expr& e, const EvolutionPDE& pde)
{
  if ((e.coords() & kOffShellMask).none()) return e;

  const Expr phi = pde.rhs();
  std::map<JetCoord, Expr> rules{{JetCoord::u_t, phi}};
  if (e.dependsOn(JetCoord::u_xt) || e.dependsOn(JetCoord::u_tt))
    rules[JetCoord::u_xt] = totalDerivative(phi, Direction::x);
  if (e.dependsOn(JetCoord::u_tt)) {
    const Expr dt = totalDerivative(phi, Direction::t);
    rules[JetCoord::u_tt] = substitute(dt, {{JetCoord::u_t, phi}, {JetCoord::u_xt, rules[JetCoord::u_xt]}});
  }
  return substitute(e, rules);
}

std::map<Monomial, Expr> collectMonomials(const Expr& e)
{
  if ((e.coords() & kOffShellMask).any())
    throw PreconditionError("substitute u_t, u_xt, u_tt before collecting monomials");

  std::map<Monomial, std::vector<Expr>> parts;
  for (const Expr& term : termsOf(expand(e))) {
    auto [m, c] = splitTerm(term);
    parts[m].push_back(std::move(c));
  }
  std::map<Monomial, Expr> out;
  for (auto& [m, cs] : parts) {
    Expr c = expand(sum(std::move(cs)));
    if (!c.isZero()) out.emplace(m, std::move(c));
  }
  return out;
}

Expr invarianceResidual(const SymmetryOperator& op, const EvolutionPDE& pde)
{
  return onShellSubstitute(applyProlonged(op, pde.delta()), pde);
}

DeterminingSystem generateDeterminingSystem(const SymmetryOperator& op, const EvolutionPDE& pde)
{
  DeterminingSystem sys;
  for (auto& [m, c] : collectMonomials(invarianceResidual(op, pde))) sys.equations.push_back({m, c});
  return sys;
}

SamplingConfig defaultInvarianceConfig()
{
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.5, 2.0}},    {"t", {0.0, 1.0}},     {"u", {0.1, 2.0}},
                {"u_x", {-1.0, 1.0}}, {"u_xx", {-1.0, 1.0}}, {"u_xxx", {-1.0, 1.0}}};
  cfg.samples = 1000;
  cfg.tolerance = 1e-9;
  return cfg;
}

InvarianceReport checkInvariance(const SymmetryOperator& op, const EvolutionPDE& pde, const SamplingConfig& cfg)
{
  validatePde(pde);

  // Individual terms of the collected residual; their sum is the residual and
  // their largest magnitude sets the scale of the pass criterion.
  std::vector<Expr> terms;
  const Expr residual = invarianceResidual(op, pde);
  try {
    for (const auto& [m, c] : collectMonomials(residual))
      for (const Expr& t : termsOf(c)) terms.push_back(t * m.toExpr());
  } catch (const NonPolynomialError&) {
    terms = termsOf(residual);
  }

  const SampleSet samples = drawSamples(cfg.domain, cfg.samples, cfg.seed);
  const Assignment base = pde.bindings();
  std::vector<double> absResidual(samples.size());
  const std::vector<double> scaled = kernels::evaluateSamples(samples.size(), [&](std::size_t i) {
    const Assignment a = samples.assignment(i, base);
    double r = 0.0;
    double scale = 0.0;
    for (const Expr& t : terms) {
      const double v = eval(t, a);
      r += v;
      scale = std::max(scale, std::abs(v));
    }
    absResidual[i] = std::abs(r);
    return std::abs(r) / (1.0 + scale);
  });

  InvarianceReport rep;
  rep.tolerance = cfg.tolerance;
  rep.seed = cfg.seed;
  rep.nSamples = samples.size();
  rep.domainNote = "x sampled on a strictly positive interval";
  if (samples.size() == 0) {
    rep.pass = true;
    return rep;
  }
  const std::size_t worst = kernels::argMax(scaled);
  rep.maxScaledResidual = scaled[worst];
  rep.maxResidual = *std::max_element(absResidual.begin(), absResidual.end());
  rep.worstPoint = samples.point(worst);
  rep.pass = rep.maxScaledResidual <= cfg.tolerance;
  return rep;
}

SamplingConfig defaultFamilyConfig()
{
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.5, 2.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 1.0}}};
  cfg.samples = 500;
  cfg.tolerance = 1e-8;
  return cfg;
}

FamilyReport checkFamilySolvesSystem(const std::vector<CoefficientFamily>& families, const SamplingConfig& cfg)
{
  FamilyReport rep;
  rep.tolerance = cfg.tolerance;
  rep.seed = cfg.seed;
  rep.nSamples = cfg.samples;
  rep.pass = true;

  const SampleSet samples = drawSamples(cfg.domain, cfg.samples, cfg.seed);
  for (const CoefficientFamily& fam : families) {
    const EvolutionPDE pde = familyPde(fam);
    const auto eqs = fixtures::operatorSixSystem(pde.A, pde.B, pde.C);
    const Assignment base = pde.bindings();

    FamilyInstanceReport inst;
    inst.id = fam.id;
    inst.systemPass = true;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      const Expr& lhs = eqs[k].lhs;
      const auto v = kernels::evaluateSamples(
          samples.size(), [&](std::size_t i) { return std::abs(eval(lhs, samples.assignment(i, base))); });
      inst.maxResidual[k] = v.empty() ? 0.0 : v[kernels::argMax(v)];
      inst.systemPass = inst.systemPass && inst.maxResidual[k] <= cfg.tolerance;
    }

    SamplingConfig icfg = defaultInvarianceConfig();
    icfg.domain.at("u") = cfg.domain.count("u") ? cfg.domain.at("u") : icfg.domain.at("u");
    icfg.domain.at("x") = cfg.domain.count("x") ? cfg.domain.at("x") : icfg.domain.at("x");
    icfg.seed = cfg.seed;
    icfg.tolerance = cfg.tolerance;
    inst.invariance = checkInvariance(exponentialOperator(), pde, icfg);

    rep.pass = rep.pass && inst.pass();
    rep.instances.push_back(std::move(inst));
  }
  return rep;
}

}  // namespace symlie
