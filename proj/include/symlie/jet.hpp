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

#include "symlie/expr.hpp"

namespace symlie {

/// Infinitesimal generator xi*d/dx + phi*d/dt + eta*d/du of a Lie point
/// symmetry. Components may only depend on x, t, u.
class SymmetryOperator {
 public:
  SymmetryOperator(Expr xi, Expr phi, Expr eta);

  static SymmetryOperator zero() { return {Expr(0), Expr(0), Expr(0)}; }

  const Expr& xi() const { return xi_; }
  const Expr& phi() const { return phi_; }
  const Expr& eta() const { return eta_; }

  SymmetryOperator scaled(const Expr& k) const { return {k * xi_, k * phi_, k * eta_}; }

 private:
  Expr xi_;
  Expr phi_;
  Expr eta_;
};

struct ProlongationCoeffs {
  Expr etaX;
  Expr etaT;
  Expr eta2X;
};

enum class Direction { x, t };

/// D_x e or D_t e. Throws JetOrderError if e contains a coordinate whose
/// successor in that direction lies outside the truncated jet space.
Expr totalDerivative(const Expr& e, Direction d);

/// Second-order prolongation coefficients of op:
///   etaX  = D_x eta - u_x D_x xi - u_t D_x phi
///   etaT  = D_t eta - u_x D_t xi - u_t D_t phi
///   eta2X = D_x etaX - u_xx D_x xi - u_xt D_x phi
ProlongationCoeffs prolongationCoeffs(const SymmetryOperator& op);

/// U^(2) applied to delta, which may depend on x, t, u, u_x, u_t, u_xx only.
Expr applyProlonged(const SymmetryOperator& op, const Expr& delta);

}  // namespace symlie
