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

#include <string>

#include "symlie/eval.hpp"
#include "symlie/expr.hpp"
#include "symlie/sampling.hpp"

namespace symlie {

/// u_t = A u_xx + B u_x + C u with A, B, C functions of (x, t, u).
///
/// Coefficients may contain abstract function symbols; `functions` binds
/// the ones that need concrete values for evaluation.
struct EvolutionPDE {
  std::string name;
  Expr A;
  Expr B;
  Expr C;
  FunctionTable functions;
  Domain domain;

  /// A u_xx + B u_x + C u.
  Expr rhs() const;
  /// u_t - rhs().
  Expr delta() const;
  Assignment bindings() const { return Assignment(functions); }
};

/// Rejects coefficients that depend on derivative coordinates, and an A
/// that vanishes on the domain (max |A| over 200 samples <= 1e-12).
void validatePde(const EvolutionPDE& pde);

}  // namespace symlie
