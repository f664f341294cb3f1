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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symlie/family.hpp"
#include "symlie/identity.hpp"
#include "symlie/jet.hpp"
#include "symlie/pde.hpp"

namespace symlie {

/// Product u_x^a * u_xx^b * u_xxx^c.
struct Monomial {
  std::array<int, 3> powers{0, 0, 0};

  static Monomial one() { return {}; }
  static Monomial of(int ux, int uxx, int uxxx) { return {{ux, uxx, uxxx}}; }

  Expr toExpr() const;
  std::string toString() const;
  int degree() const { return powers[0] + powers[1] + powers[2]; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

struct DeterminingEquation {
  Monomial source;
  Expr lhs;  // required to vanish identically
};

struct DeterminingSystem {
  std::vector<DeterminingEquation> equations;  // sorted by source, unique

  const DeterminingEquation* find(const Monomial& m) const;
};

/// Replaces u_t by Phi = A u_xx + B u_x + C u, u_xt by D_x Phi and u_tt by
/// D_t Phi (with its own u_t, u_xt substituted). Throws JetOrderError when
/// a needed total derivative leaves the jet space.
Expr onShellSubstitute(const Expr& e, const EvolutionPDE& pde);

/// Coefficients of e viewed as a polynomial in u_x, u_xx, u_xxx. Zero
/// coefficients are omitted. Throws NonPolynomialError when one of those
/// coordinates occurs in a non-polynomial position, PreconditionError when
/// u_t, u_xt or u_tt is still present.
std::map<Monomial, Expr> collectMonomials(const Expr& e);

/// On-shell prolonged residual of pde under op.
Expr invarianceResidual(const SymmetryOperator& op, const EvolutionPDE& pde);

/// One equation per monomial coefficient of the on-shell residual.
DeterminingSystem generateDeterminingSystem(const SymmetryOperator& op, const EvolutionPDE& pde);

struct InvarianceReport {
  bool pass = false;
  double maxResidual = 0.0;
  /// max |r| / (1 + largest |term|), compared against tolerance.
  double maxScaledResidual = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::size_t nSamples = 0;
  std::map<std::string, double> worstPoint;
  std::string domainNote;
};

/// x in [0.5,2], t in [0,1], u in [0.1,2], u_x, u_xx, u_xxx in [-1,1];
/// 1000 samples; tolerance 1e-9.
SamplingConfig defaultInvarianceConfig();

/// Samples the on-shell residual over jet points. Passes iff at every
/// sample |r| <= tol * (1 + magnitude of the largest contributing term).
InvarianceReport checkInvariance(const SymmetryOperator& op, const EvolutionPDE& pde,
                                 const SamplingConfig& cfg = defaultInvarianceConfig());

struct FamilyInstanceReport {
  std::string id;
  std::array<double, 3> maxResidual{};  // per equation of the transcribed system
  bool systemPass = false;
  InvarianceReport invariance;
  bool pass() const { return systemPass && invariance.pass; }
};

struct FamilyReport {
  bool pass = false;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::size_t nSamples = 0;
  std::vector<FamilyInstanceReport> instances;
};

/// Evaluates the transcribed system for the e^{2t} operator on each family
/// instance (500 samples in the default box unless cfg says otherwise,
/// tolerance 1e-8) and runs checkInvariance on the induced equation.
FamilyReport checkFamilySolvesSystem(const std::vector<CoefficientFamily>& families, const SamplingConfig& cfg);
SamplingConfig defaultFamilyConfig();

}  // namespace symlie
