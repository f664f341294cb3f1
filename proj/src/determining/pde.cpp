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

#include "symlie/pde.hpp"

#include <cmath>

#include "symlie/errors.hpp"

namespace symlie {

Expr EvolutionPDE::rhs() const
{
  return A * var(JetCoord::u_xx) + B * var(JetCoord::u_x) + C * var(JetCoord::u);
}

Expr EvolutionPDE::delta() const { return var(JetCoord::u_t) - rhs(); }

void validatePde(const EvolutionPDE& pde)
{
  const CoordMask base = maskOf(JetCoord::x) | maskOf(JetCoord::t) | maskOf(JetCoord::u);
  for (const Expr* c : {&pde.A, &pde.B, &pde.C})
    if ((c->coords() & ~base).any())
      throw PreconditionError("coefficient depends on a derivative coordinate: " + toString(*c));

  const SampleSet s = drawSamples(pde.domain, 200, kDefaultSeed);
  const Assignment base_ = pde.bindings();
  double maxA = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double a = std::abs(eval(pde.A, s.assignment(i, base_)));
    if (std::isfinite(a)) maxA = std::max(maxA, a);
  }
  if (!(maxA > 1e-12)) throw PreconditionError("A vanishes on the domain of " + pde.name);
}

}  // namespace symlie
