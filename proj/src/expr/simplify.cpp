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

#include <algorithm>
#include <map>
#include <utility>

#include "node_util.hpp"
#include "symlie/expr.hpp"

namespace symlie {

namespace {

using detail::makeNode;
using detail::makePower;
using detail::makeRational;

Expr canonicalPower(const Expr& base, const Rational& q);
Expr canonicalProduct(const std::vector<Expr>& children);
Expr canonicalSum(const std::vector<Expr>& children);

// Splits a canonical term into rational coefficient and coefficient-free key.
std::pair<Rational, Expr> splitCoefficient(const Expr& term)
{
  const Node& n = term.node();
  if (n.kind == Kind::Rational) return {n.value, Expr(1)};
  if (n.kind == Kind::Neg) return {Rational(-1), n.children[0]};
  if (n.kind == Kind::Product && n.children.front().isRational()) {
    std::vector<Expr> rest(n.children.begin() + 1, n.children.end());
    if (rest.size() == 1) return {n.children.front().rational(), rest.front()};
    return {n.children.front().rational(), makeNode(Kind::Product, std::move(rest), true)};
  }
  return {Rational(1), term};
}

// Builds coefficient * key where key is canonical and coefficient-free.
Expr makeTerm(const Rational& c, const Expr& key)
{
  if (c.isZero()) return Expr(0);
  if (key.isOne()) return makeRational(c);
  if (c.isOne()) return key;
  if (key.kind() == Kind::Product) {
    std::vector<Expr> kids;
    kids.reserve(key.children().size() + 1);
    kids.push_back(makeRational(c));
    kids.insert(kids.end(), key.children().begin(), key.children().end());
    return makeNode(Kind::Product, std::move(kids), true);
  }
  if (c == Rational(-1)) return makeNode(Kind::Neg, {key}, true);
  return makeNode(Kind::Product, {makeRational(c), key}, true);
}

Expr canonicalPower(const Expr& base, const Rational& q)
{
  if (q.isZero()) return Expr(1);
  if (q.isOne()) return base;
  const Node& b = base.node();
  switch (b.kind) {
    case Kind::Rational:
      if (b.value.isOne()) return Expr(1);
      if (b.value.isZero() && !q.isNegative()) return Expr(0);
      if (q.isInteger() && !b.value.isZero()) return makeRational(b.value.pow(q.num()));
      break;
    case Kind::Power:
      if (q.isInteger()) return canonicalPower(b.children[0], b.value * q);
      break;
    case Kind::Neg:
      if (q.isInteger()) {
        const Rational sign = q.num() % 2 == 0 ? Rational(1) : Rational(-1);
        return canonicalProduct({makeRational(sign), canonicalPower(b.children[0], q)});
      }
      break;
    case Kind::Product:
      if (q.isInteger()) {
        std::vector<Expr> kids;
        kids.reserve(b.children.size());
        for (const auto& f : b.children) kids.push_back(canonicalPower(f, q));
        return canonicalProduct(kids);
      }
      break;
    case Kind::Exp: {
      Expr arg = canonicalProduct({makeRational(q), b.children[0]});
      if (arg.isZero()) return Expr(1);
      return makeNode(Kind::Exp, {std::move(arg)}, true);
    }
    default:
      break;
  }
  return makePower(base, q, true);
}

Expr canonicalProduct(const std::vector<Expr>& children)
{
  Rational coeff(1);
  std::map<Expr, Rational, ExprLess> powers;

  auto addFactor = [&](auto&& self, const Expr& f) -> void {
    const Node& n = f.node();
    switch (n.kind) {
      case Kind::Rational:
        coeff *= n.value;
        return;
      case Kind::Neg:
        coeff = -coeff;
        self(self, n.children[0]);
        return;
      case Kind::Product:
        for (const auto& c : n.children) self(self, c);
        return;
      case Kind::Power:
        powers[n.children[0]] += n.value;
        return;
      default:
        powers[f] += Rational(1);
        return;
    }
  };
  for (const auto& c : children) {
    addFactor(addFactor, c);
    if (coeff.isZero()) return Expr(0);
  }

  std::vector<Expr> factors;
  bool again = false;
  for (const auto& [base, q] : powers) {
    if (q.isZero()) continue;
    Expr f = canonicalPower(base, q);
    const Kind k = f.kind();
    if (k == Kind::Rational) {
      coeff *= f.rational();
      continue;
    }
    if (k == Kind::Product || k == Kind::Neg) again = true;
    if (!(f.kind() == Kind::Power ? f.children()[0] == base : f == base)) again = true;
    factors.push_back(std::move(f));
  }
  if (coeff.isZero()) return Expr(0);
  if (again) {
    factors.push_back(makeRational(coeff));
    return canonicalProduct(factors);
  }
  if (factors.empty()) return makeRational(coeff);
  if (factors.size() == 1 && factors.front().kind() == Kind::Sum) {
    if (coeff.isOne()) return factors.front();
    std::vector<Expr> terms;
    for (const auto& t : factors.front().children()) terms.push_back(canonicalProduct({makeRational(coeff), t}));
    return canonicalSum(terms);
  }
  std::sort(factors.begin(), factors.end(), [](const Expr& a, const Expr& b) {
    const Expr& ba = a.kind() == Kind::Power ? a.children()[0] : a;
    const Expr& bb = b.kind() == Kind::Power ? b.children()[0] : b;
    const int c = compare(ba, bb);
    if (c != 0) return c < 0;
    return compare(a, b) < 0;
  });
  if (factors.size() == 1) return makeTerm(coeff, factors.front());
  return makeTerm(coeff, makeNode(Kind::Product, std::move(factors), true));
}

Expr canonicalSum(const std::vector<Expr>& children)
{
  std::map<Expr, Rational, ExprLess> terms;
  auto addTerm = [&](auto&& self, const Expr& t) -> void {
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.children()) self(self, c);
      return;
    }
    auto [c, key] = splitCoefficient(t);
    if (c.isZero()) return;
    terms[key] += c;
  };
  for (const auto& c : children) addTerm(addTerm, c);

  std::vector<Expr> out;
  for (const auto& [key, c] : terms)
    if (!c.isZero()) out.push_back(makeTerm(c, key));
  if (out.empty()) return Expr(0);
  if (out.size() == 1) return out.front();
  return makeNode(Kind::Sum, std::move(out), true);
}

Expr canonicalTop(const Node& n, std::vector<Expr> kids)
{
  switch (n.kind) {
    case Kind::Sum: return canonicalSum(kids);
    case Kind::Product: return canonicalProduct(kids);
    case Kind::Neg: return canonicalProduct({Expr(-1), kids[0]});
    case Kind::Power: return canonicalPower(kids[0], n.value);
    case Kind::Exp:
      if (kids[0].isZero()) return Expr(1);
      return makeNode(Kind::Exp, std::move(kids), true);
    case Kind::Ln:
      if (kids[0].isOne()) return Expr(0);
      if (kids[0].kind() == Kind::Exp) return kids[0].children()[0];
      return makeNode(Kind::Ln, std::move(kids), true);
    case Kind::FuncApp: return detail::makeFunc(n.name, std::move(kids), n.orders, true);
    default: return makeNode(n.kind, std::move(kids), true);
  }
}

// Product of already-expanded factors, multiplied out term by term.
Expr distribute(const std::vector<Expr>& factors)
{
  std::vector<Expr> acc{Expr(1)};
  for (const auto& f : factors) {
    const std::vector<Expr> parts = f.kind() == Kind::Sum ? f.children() : std::vector<Expr>{f};
    std::vector<Expr> next;
    next.reserve(acc.size() * parts.size());
    for (const auto& a : acc)
      for (const auto& p : parts) next.push_back(canonicalProduct({a, p}));
    acc = std::move(next);
  }
  return canonicalSum(acc);
}

}  // namespace

Expr simplify(const Expr& e)
{
  if (e.isCanonical()) return e;
  const Node& n = e.node();
  std::vector<Expr> kids;
  kids.reserve(n.children.size());
  for (const auto& c : n.children) kids.push_back(simplify(c));
  return canonicalTop(n, std::move(kids));
}

Expr expand(const Expr& e)
{
  const Expr s = simplify(e);
  const Node& n = s.node();
  if (n.children.empty()) return s;
  std::vector<Expr> kids;
  kids.reserve(n.children.size());
  for (const auto& c : n.children) kids.push_back(expand(c));

  switch (n.kind) {
    case Kind::Product:
      return distribute(kids);
    case Kind::Power: {
      const Rational& q = n.value;
      if (kids[0].kind() == Kind::Sum && q.isInteger() && q.num() > 1)
        return distribute(std::vector<Expr>(static_cast<std::size_t>(q.num()), kids[0]));
      Expr p = canonicalPower(kids[0], q);
      if (p.kind() == Kind::Product) return expand(p);
      return p;
    }
    default:
      return canonicalTop(n, std::move(kids));
  }
}

Expr combineExponentials(const Expr& e)
{
  const Expr s = simplify(e);
  const Node& n = s.node();
  if (n.children.empty()) return s;
  std::vector<Expr> kids;
  kids.reserve(n.children.size());
  for (const auto& c : n.children) kids.push_back(combineExponentials(c));
  if (n.kind == Kind::Product) {
    std::vector<Expr> rest;
    std::vector<Expr> exponents;
    for (const auto& k : kids) {
      if (k.kind() == Kind::Exp) exponents.push_back(k.children()[0]);
      else rest.push_back(k);
    }
    if (exponents.size() > 1) {
      rest.push_back(exp(expand(sum(std::move(exponents)))));
      return product(std::move(rest));
    }
  }
  if (n.kind == Kind::Exp) return exp(expand(kids[0]));
  return canonicalTop(n, std::move(kids));
}

}  // namespace symlie
