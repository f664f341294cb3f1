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

#include "symlie/family.hpp"

namespace symlie {

namespace {

const std::vector<std::string> kFamilySlots = {"a", "b"};

}  // namespace

CoefficientFamily CoefficientFamily::fromText(std::string id, std::string_view f, std::string_view g,
                                              std::string_view h)
{
  return {std::move(id), ExprFunction::fromText(f, kFamilySlots), ExprFunction::fromText(g, kFamilySlots),
          ExprFunction::fromText(h, kFamilySlots)};
}

CoefficientFamily CoefficientFamily::constant(std::string id, Rational f, Rational g, Rational h)
{
  return {std::move(id), std::make_shared<ExprFunction>(Expr(f), 2), std::make_shared<ExprFunction>(Expr(g), 2),
          std::make_shared<ExprFunction>(Expr(h), 2)};
}

Expr familyArgA() { return var(JetCoord::t) - ln(var(JetCoord::x)); }

Expr familyArgB() { return var(JetCoord::u) * exp(pow(var(JetCoord::x), 2) / 2); }

EvolutionPDE familyPde(const CoefficientFamily& fam)
{
  const Expr x = var(JetCoord::x);
  const std::vector<Expr> args = {familyArgA(), familyArgB()};
  const Expr f = func("f", args);
  const Expr g = func("g", args);
  const Expr h = func("h", args);

  EvolutionPDE pde;
  pde.name = "family:" + fam.id;
  pde.A = f;
  pde.B = (-1 + 2 * f) * x + g / x;
  pde.C = (-1 + f) * pow(x, 2) + f + g + h / pow(x, 2);
  pde.functions = {{"f", fam.f}, {"g", fam.g}, {"h", fam.h}};
  pde.domain = {{"x", {0.5, 2.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 1.0}}};
  return pde;
}

}  // namespace symlie
