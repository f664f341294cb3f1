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

#include "symlie/fixtures.hpp"

namespace symlie::fixtures {

namespace {

Expr d(const Expr& e, JetCoord c) { return diffPartial(e, c); }
Expr d(const Expr& e, JetCoord a, JetCoord b) { return diffPartial(diffPartial(e, a), b); }

}  // namespace

GeneralSystem generalSystem(const SymmetryOperator& op, const Expr& A, const Expr& B, const Expr& C)
{
  using enum JetCoord;
  const Expr& xi = op.xi();
  const Expr& ph = op.phi();
  const Expr& et = op.eta();
  const Expr U = var(u);

  GeneralSystem s;
  s.conditions = {d(ph, x), d(ph, u), d(xi, u), d(et, u, u)};

  const Expr e1 = -ph * d(A, t) - xi * d(A, x) - et * d(A, u) - A * d(ph, t) + 2 * A * d(xi, x);
  const Expr e2 = -ph * d(B, t) - xi * d(B, x) - et * d(B, u) + B * d(xi, x) - d(xi, t) - B * d(ph, t) -
                  2 * A * d(et, x, u) + A * d(xi, x, x);
  const Expr e3 = -ph * d(C, t) * U - xi * d(C, x) * U - C * et - et * d(C, u) * U - B * d(et, x) + d(et, t) +
                  C * d(et, u) * U - d(ph, t) * C * U - A * d(et, x, x);

  s.equations = {{"u_xx", Monomial::of(0, 1, 0), e1, Expr(1)},
                 {"u_x", Monomial::of(1, 0, 0), e2, Expr(1)},
                 {"1", Monomial::one(), e3, Expr(1)}};
  return s;
}

std::vector<FixtureEquation> operatorSixSystem(const Expr& A, const Expr& B, const Expr& C)
{
  using enum JetCoord;
  const Expr X = var(x);
  const Expr U = var(u);
  const Expr X2 = pow(X, 2);
  const Expr e2t = exp(2 * var(t));

  const Expr e1 = d(A, t) + X * d(A, x) - X2 * d(A, u) * U;
  const Expr e2 = -d(B, t) - X * d(B, x) + X2 * U * d(B, u) - B - 2 * X + 4 * A * X;
  const Expr e3 = d(C, t) * U + d(C, x) * U * X - d(C, u) * pow(U, 2) * X2 - 2 * B * X * U + 2 * X2 * U +
                  2 * C * U - 2 * A * U;

  return {{"u_xx", Monomial::of(0, 1, 0), e1, -e2t},
          {"u_x", Monomial::of(1, 0, 0), e2, e2t},
          {"1", Monomial::one(), e3, -e2t}};
}

}  // namespace symlie::fixtures
