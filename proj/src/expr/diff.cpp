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

#include <utility>

#include "symlie/expr.hpp"

namespace symlie {

Expr diffPartial(const Expr& e, JetCoord v)
{
  if (!e.dependsOn(v)) return Expr(0);
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Var:
      return n.coord == v ? Expr(1) : Expr(0);
    case Kind::Neg:
      return -diffPartial(n.children[0], v);
    case Kind::Sum: {
      std::vector<Expr> terms;
      terms.reserve(n.children.size());
      for (const auto& c : n.children) terms.push_back(diffPartial(c, v));
      return sum(std::move(terms));
    }
    case Kind::Product: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (!n.children[i].dependsOn(v)) continue;
        std::vector<Expr> factors = n.children;
        factors[i] = diffPartial(n.children[i], v);
        terms.push_back(product(std::move(factors)));
      }
      return sum(std::move(terms));
    }
    case Kind::Power: {
      const Expr& base = n.children[0];
      const Rational& q = n.value;
      return product({Expr(q), pow(base, q - Rational(1)), diffPartial(base, v)});
    }
    case Kind::Exp:
      return product({simplify(e), diffPartial(n.children[0], v)});
    case Kind::Ln:
      return product({diffPartial(n.children[0], v), pow(n.children[0], Rational(-1))});
    case Kind::FuncApp: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (!n.children[i].dependsOn(v)) continue;
        std::vector<int> orders = n.orders;
        ++orders[i];
        terms.push_back(product({func(n.name, n.children, std::move(orders)), diffPartial(n.children[i], v)}));
      }
      return sum(std::move(terms));
    }
    default:
      return Expr(0);
  }
}

}  // namespace symlie
