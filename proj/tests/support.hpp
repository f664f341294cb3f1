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

// Test-only helpers: random expression generation and finite-difference
// oracles. Nothing here calls diffPartial, so derivative checks built on
// these helpers stay independent of the symbolic path.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "symlie/eval.hpp"
#include "symlie/expr.hpp"

namespace symlie::testing {

/// Random expressions over x, t, u, u_x that stay finite and smooth on
/// x in [0.5, 2], t in [0, 1], u in [0.1, 2], u_x in [-1, 1].
class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  Expr operator()(int depth = 3) { return gen(depth); }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Expr leaf()
  {
    static const JetCoord coords[] = {JetCoord::x, JetCoord::t, JetCoord::u, JetCoord::u_x};
    switch (pick(3)) {
      case 0: return rawVar(coords[pick(4)]);
      case 1: return Expr(Rational(pick(9) - 4, 1 + pick(3)));
      default: return rawVar(coords[pick(4)]);
    }
  }

  Expr gen(int depth)
  {
    if (depth <= 0) return leaf();
    switch (pick(7)) {
      case 0:
      case 1: return rawSum({gen(depth - 1), gen(depth - 1)});
      case 2:
      case 3: return rawProduct({gen(depth - 1), gen(depth - 1)});
      case 4: return rawPower(gen(depth - 1), Rational(2 + pick(2)));
      case 5: return rawExp(rawProduct({Expr(Rational(1, 4)), rawNeg(rawPower(gen(depth - 1), Rational(2)))}));
      default:
        if (pick(2) == 0) return rawLn(rawSum({Expr(1), rawPower(gen(depth - 1), Rational(2))}));
        return rawProduct({gen(depth - 1), rawPower(rawVar(JetCoord::x), Rational(-1))});
    }
  }

  std::mt19937_64 rng_;
};

/// Central finite difference of e with respect to coordinate c at point a.
inline double centralDifference(const Expr& e, const Assignment& a, JetCoord c, double h = 1e-5)
{
  const double v = *a.coord(c);
  Assignment plus = a;
  Assignment minus = a;
  plus.set(c, v + h);
  minus.set(c, v - h);
  return (eval(e, plus) - eval(e, minus)) / (2.0 * h);
}

inline bool closeRel(double a, double b, double rel)
{
  return std::fabs(a - b) <= rel * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace symlie::testing
