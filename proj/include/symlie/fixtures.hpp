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

// Hand transcriptions of the published determining systems. They are
// regression oracles for the generator and are never produced by it.

#include <string>
#include <vector>

#include "symlie/determining.hpp"

namespace symlie::fixtures {

struct FixtureEquation {
  std::string label;
  Monomial source;
  Expr lhs;
  /// generated coefficient == normalization * lhs
  Expr normalization;
};

/// The general system for a generator with phi = phi(t), xi = xi(x, t),
/// eta linear in u. Conditions are the four first-order constraints
/// phi_x = phi_u = xi_u = eta_uu = 0; equations carry the u_xx, u_x and
/// u^0 coefficients.
struct GeneralSystem {
  std::vector<Expr> conditions;
  std::vector<FixtureEquation> equations;
};
GeneralSystem generalSystem(const SymmetryOperator& op, const Expr& A, const Expr& B, const Expr& C);

/// The system for the operator e^{2t} d/dt + x e^{2t} d/dx - x^2 e^{2t} u d/du.
std::vector<FixtureEquation> operatorSixSystem(const Expr& A, const Expr& B, const Expr& C);

}  // namespace symlie::fixtures
