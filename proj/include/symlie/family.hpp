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

#include <memory>
#include <string>

#include "symlie/eval.hpp"
#include "symlie/pde.hpp"

namespace symlie {

/// Three bivariate functions f, g, h of (a, b) = (t - ln x, u e^{x^2/2})
/// selecting one equation of the invariant family:
///
///   A = f
///   B = (-1 + 2 f) x + g / x
///   C = (-1 + f) x^2 + f + g + h / x^2
struct CoefficientFamily {
  std::string id;
  std::shared_ptr<const ExprFunction> f;
  std::shared_ptr<const ExprFunction> g;
  std::shared_ptr<const ExprFunction> h;

  /// Bodies given in the slot variables a and b.
  static CoefficientFamily fromText(std::string id, std::string_view f, std::string_view g, std::string_view h);
  static CoefficientFamily constant(std::string id, Rational f, Rational g, Rational h);
};

/// Invariant arguments of the family functions.
Expr familyArgA();  // t - ln(x)
Expr familyArgB();  // u*exp(x^2/2)

/// The equation selected by fam, with f, g, h bound. Does not verify it.
EvolutionPDE familyPde(const CoefficientFamily& fam);

}  // namespace symlie
