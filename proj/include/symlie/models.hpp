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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "symlie/determining.hpp"
#include "symlie/family.hpp"
#include "symlie/jet.hpp"
#include "symlie/pde.hpp"

namespace symlie {

/// u_t = u_xx + x u_x + u on x in [0.2, 3], t in [0, 1].
EvolutionPDE fokkerPlanck();
/// u_t = u_xx + (x - 1/x) u_x on x in [0.2, 3], t in [0, 1].
EvolutionPDE backwardKolmogorov();

/// e^{2t} d/dt + x e^{2t} d/dx - x^2 e^{2t} u d/du.
SymmetryOperator exponentialOperator();

/// Pinned family instances: "fp" (1, 0, 0), "bk" (1, -1, 0),
/// "smooth" (1 + b/4, 1/2, 0) and "affine" (1 + a/10, b/5 - 1, a/2).
const std::vector<CoefficientFamily>& familyRegistry();
/// Throws PreconditionError for an unknown id.
const CoefficientFamily& familyById(const std::string& id);

/// familyPde(fam) after checkFamilySolvesSystem passed on it. Throws
/// NumericalError if the check fails. The report is stored in *report.
EvolutionPDE instantiateFamily(const CoefficientFamily& fam, FamilyReport* report = nullptr);

/// "fokker-planck", "backward-kolmogorov" or "family:<id>".
EvolutionPDE modelByName(const std::string& name);

struct ResidualReport {
  bool pass = false;
  double maxResidual = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::size_t nSamples = 0;
  std::map<std::string, double> worstPoint;
};

struct AnalyticSolution {
  std::string name;
  /// Depends on x, t and the named constants.
  Expr u;
  std::map<std::string, double> constants;
  std::string sourcePde;
  ResidualReport verification;
};

/// x in [0.2, 3], t in [0, 1]; 500 samples; tolerance 1e-10.
SamplingConfig defaultSolutionConfig();

/// u_t - A u_xx - B u_x - C u with u given by sol, derivatives exact.
Expr solutionResidual(const EvolutionPDE& pde, const Expr& u);

/// max |residual| over sampled (x, t); passes iff it is <= cfg.tolerance.
ResidualReport verifySolution(const EvolutionPDE& pde, const AnalyticSolution& sol,
                              const SamplingConfig& cfg = defaultSolutionConfig());

/// c1 x e^{-t} e^{-x^2/2} + c2 e^{-x^2/2}, verified against fokkerPlanck().
AnalyticSolution analyticFP(double c1, double c2);
/// e^{-x^2/2} (c3 + c4 x^2 e^{-2t}), verified against backwardKolmogorov().
AnalyticSolution analyticBK(double c3, double c4);

}  // namespace symlie
