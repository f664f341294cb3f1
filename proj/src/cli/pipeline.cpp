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

#include <cstdio>
#include <ostream>

#include "symlie/cli.hpp"
#include "symlie/models.hpp"
#include "symlie/similarity.hpp"

namespace symlie::cli {

namespace {

struct PipelineCase {
  const char* model;
  std::array<double, 3> fgh;
  // Constant names attached to the ascending indicial roots.
  std::array<const char*, 2> constants;
  AnalyticSolution (*solution)(double, double);
};

constexpr PipelineCase kCases[] = {
    {"fokker-planck", {1, 0, 0}, {"c2", "c1"}, &analyticFP},
    {"backward-kolmogorov", {1, -1, 0}, {"c3", "c4"}, &analyticBK},
};

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

int printPipeline(const std::string& model, std::ostream& out)
{
  const PipelineCase* pc = nullptr;
  for (const auto& c : kCases)
    if (model == c.model) pc = &c;
  if (!pc) {
    out << "no pipeline for model \"" << model << "\" (known: fokker-planck, backward-kolmogorov)\n";
    return kInvalid;
  }

  const EvolutionPDE pde = modelByName(model);
  const SymmetryOperator op = exponentialOperator();
  out << "model: " << pde.name << "\n";
  out << "equation: u_t = " << toString(pde.rhs()) << "\n";
  out << "operator: xi = " << toString(op.xi()) << ", phi = " << toString(op.phi()) << ", eta = " << toString(op.eta())
      << "\n";

  const InvarianceReport inv = checkInvariance(op, pde);
  out << "invariance: " << (inv.pass ? "pass" : "FAIL") << ", max residual " << sci(inv.maxResidual) << " over "
      << inv.nSamples << " samples (seed " << inv.seed << ")\n";

  const SimilarityMap map = SimilarityMap::standard();
  out << "similarity variables: z = " << toString(map.zOf) << ", phi = " << toString(map.phiOf) << "\n";
  out << "family parameters: f = " << num(pc->fgh[0]) << ", g = " << num(pc->fgh[1]) << ", h = " << num(pc->fgh[2])
      << "\n";

  const ReducedODE ode = reduce(pc->fgh[0], pc->fgh[1], pc->fgh[2]);
  const auto [r1, r2] = indicialRoots(ode);
  const Expr profile = solveReducedAnalytic(ode, named(pc->constants[0]), named(pc->constants[1]));
  out << "reduced equation: " << ode.toString() << "\n";
  out << "indicial roots: " << num(r1) << ", " << num(r2) << "\n";
  out << "profile: phi(z) = " << profileToString(profile) << "\n";

  // The reconstruction must coincide with the catalog solution as a
  // function of x, t and both constants.
  const AnalyticSolution sol = pc->solution(1.0, 1.0);
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}, {pc->constants[0], {-2.0, 2.0}}, {pc->constants[1], {-2.0, 2.0}}};
  const bool same = equalNumeric(map.reconstruct(profile), sol.u, cfg).pass;
  if (!same) {
    out << "reconstructed u: " << toString(map.reconstruct(profile)) << " (does not match the catalog solution)\n";
    return kFail;
  }
  out << "reconstructed u: " << toString(sol.u) << "\n";
  out << "residual: " << (sol.verification.pass ? "pass" : "FAIL") << ", max " << sci(sol.verification.maxResidual)
      << " over " << sol.verification.nSamples << " samples\n";
  return inv.pass && sol.verification.pass ? kPass : kFail;
}

}  // namespace symlie::cli
