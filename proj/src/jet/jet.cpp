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

#include "symlie/jet.hpp"

#include <array>
#include <optional>
#include <string>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

const CoordMask kBaseCoords = maskOf(JetCoord::x) | maskOf(JetCoord::t) | maskOf(JetCoord::u);

struct Step {
  JetCoord from;
  std::optional<JetCoord> to;  // empty: successor outside the jet space
};

// Chain terms of D_x and D_t: coefficient coordinate and the coordinate
// it multiplies the partial derivative of.
constexpr std::array<Step, 7> kStepsX = {{{JetCoord::u, JetCoord::u_x},
                                          {JetCoord::u_x, JetCoord::u_xx},
                                          {JetCoord::u_t, JetCoord::u_xt},
                                          {JetCoord::u_xx, JetCoord::u_xxx},
                                          {JetCoord::u_xt, std::nullopt},
                                          {JetCoord::u_tt, std::nullopt},
                                          {JetCoord::u_xxx, std::nullopt}}};

constexpr std::array<Step, 7> kStepsT = {{{JetCoord::u, JetCoord::u_t},
                                          {JetCoord::u_x, JetCoord::u_xt},
                                          {JetCoord::u_t, JetCoord::u_tt},
                                          {JetCoord::u_xx, std::nullopt},
                                          {JetCoord::u_xt, std::nullopt},
                                          {JetCoord::u_tt, std::nullopt},
                                          {JetCoord::u_xxx, std::nullopt}}};

}  // namespace

SymmetryOperator::SymmetryOperator(Expr xi, Expr phi, Expr eta)
    : xi_(simplify(xi)), phi_(simplify(phi)), eta_(simplify(eta))
{
  for (const Expr* c : {&xi_, &phi_, &eta_})
    if ((c->coords() & ~kBaseCoords).any())
      throw PreconditionError("symmetry operator components may depend on x, t, u only: " + toString(*c));
}

Expr totalDerivative(const Expr& e, Direction d)
{
  const auto& steps = d == Direction::x ? kStepsX : kStepsT;
  std::vector<Expr> terms{diffPartial(e, d == Direction::x ? JetCoord::x : JetCoord::t)};
  for (const auto& s : steps) {
    if (!e.dependsOn(s.from)) continue;
    if (!s.to)
      throw JetOrderError(std::string("D_") + (d == Direction::x ? "x" : "t") + " of " +
                          std::string(toString(s.from)) + " leaves the truncated jet space");
    terms.push_back(var(*s.to) * diffPartial(e, s.from));
  }
  return sum(std::move(terms));
}

ProlongationCoeffs prolongationCoeffs(const SymmetryOperator& op)
{
  const Expr ux = var(JetCoord::u_x);
  const Expr ut = var(JetCoord::u_t);
  const Expr uxx = var(JetCoord::u_xx);
  const Expr uxt = var(JetCoord::u_xt);

  const Expr dxXi = totalDerivative(op.xi(), Direction::x);
  const Expr dxPhi = totalDerivative(op.phi(), Direction::x);

  ProlongationCoeffs p;
  p.etaX = totalDerivative(op.eta(), Direction::x) - ux * dxXi - ut * dxPhi;
  p.etaT = totalDerivative(op.eta(), Direction::t) - ux * totalDerivative(op.xi(), Direction::t) -
           ut * totalDerivative(op.phi(), Direction::t);
  p.eta2X = totalDerivative(p.etaX, Direction::x) - uxx * dxXi - uxt * dxPhi;
  return p;
}

Expr applyProlonged(const SymmetryOperator& op, const Expr& delta)
{
  const CoordMask allowed = kBaseCoords | maskOf(JetCoord::u_x) | maskOf(JetCoord::u_t) | maskOf(JetCoord::u_xx);
  if ((delta.coords() & ~allowed).any())
    throw PreconditionError("prolonged operator applies to x, t, u, u_x, u_t, u_xx only: " + toString(delta));

  const ProlongationCoeffs p = prolongationCoeffs(op);
  return sum({op.phi() * diffPartial(delta, JetCoord::t), op.xi() * diffPartial(delta, JetCoord::x),
              op.eta() * diffPartial(delta, JetCoord::u), p.etaX * diffPartial(delta, JetCoord::u_x),
              p.etaT * diffPartial(delta, JetCoord::u_t), p.eta2X * diffPartial(delta, JetCoord::u_xx)});
}

}  // namespace symlie
