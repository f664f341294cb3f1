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

#include "symlie/expr.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "node_util.hpp"

namespace symlie {

namespace {

constexpr std::array<std::string_view, kJetCoordCount> kCoordNames = {
    "x", "t", "u", "u_x", "u_t", "u_xx", "u_xt", "u_tt", "u_xxx"};

std::size_t mix(std::size_t seed, std::size_t v)
{
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Expr& zeroExpr()
{
  static const Expr z = detail::makeRational(Rational(0));
  return z;
}

}  // namespace

std::string_view toString(JetCoord c) noexcept { return kCoordNames[static_cast<std::size_t>(c)]; }

std::optional<JetCoord> jetCoordFromName(std::string_view name) noexcept
{
  for (std::size_t i = 0; i < kCoordNames.size(); ++i)
    if (kCoordNames[i] == name) return static_cast<JetCoord>(i);
  return std::nullopt;
}

namespace detail {

Expr finish(Node n, bool canonical)
{
  std::size_t h = mix(0, static_cast<std::size_t>(n.kind));
  switch (n.kind) {
    case Kind::Rational:
      h = mix(h, std::hash<std::int64_t>{}(n.value.num()));
      h = mix(h, std::hash<std::int64_t>{}(n.value.den()));
      break;
    case Kind::NamedConst:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Var:
      h = mix(h, static_cast<std::size_t>(n.coord));
      n.coords.set(static_cast<std::size_t>(n.coord));
      break;
    case Kind::FuncApp:
      h = mix(h, std::hash<std::string>{}(n.name));
      for (int o : n.orders) h = mix(h, static_cast<std::size_t>(o));
      break;
    case Kind::Power:
      h = mix(h, std::hash<std::int64_t>{}(n.value.num()));
      h = mix(h, std::hash<std::int64_t>{}(n.value.den()));
      break;
    default:
      break;
  }
  for (const auto& c : n.children) {
    h = mix(h, c.hash());
    n.coords |= c.coords();
  }
  n.hash = h;
  n.canonical = canonical;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr makeRational(Rational r)
{
  Node n;
  n.kind = Kind::Rational;
  n.value = r;
  return finish(std::move(n), true);
}

Expr makeNode(Kind k, std::vector<Expr> children, bool canonical)
{
  Node n;
  n.kind = k;
  n.children = std::move(children);
  return finish(std::move(n), canonical);
}

Expr makePower(Expr base, Rational q, bool canonical)
{
  Node n;
  n.kind = Kind::Power;
  n.value = q;
  n.children = {std::move(base)};
  return finish(std::move(n), canonical);
}

Expr makeFunc(std::string name, std::vector<Expr> args, std::vector<int> orders, bool canonical)
{
  if (orders.empty()) orders.assign(args.size(), 0);
  if (orders.size() != args.size())
    throw std::invalid_argument("function '" + name + "': derivative orders must match argument count");
  for (int o : orders)
    if (o < 0) throw std::invalid_argument("function '" + name + "': negative derivative order");
  Node n;
  n.kind = Kind::FuncApp;
  n.name = std::move(name);
  n.children = std::move(args);
  n.orders = std::move(orders);
  return finish(std::move(n), canonical);
}

}  // namespace detail

Expr::Expr() : Expr(zeroExpr()) {}

Expr::Expr(Rational r) : Expr(detail::makeRational(r)) {}

Kind Expr::kind() const noexcept { return node_->kind; }
bool Expr::isZero() const noexcept { return node_->kind == Kind::Rational && node_->value.isZero(); }
bool Expr::isOne() const noexcept { return node_->kind == Kind::Rational && node_->value.isOne(); }

const Rational& Expr::rational() const
{
  if (!isRational()) throw std::logic_error("expression is not a rational constant");
  return node_->value;
}

const CoordMask& Expr::coords() const noexcept { return node_->coords; }
const std::vector<Expr>& Expr::children() const noexcept { return node_->children; }
std::size_t Expr::hash() const noexcept { return node_->hash; }
bool Expr::isCanonical() const noexcept { return node_->canonical; }

bool operator==(const Expr& a, const Expr& b) noexcept
{
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Expr& a, const Expr& b) noexcept
{
  const Node& x = a.node();
  const Node& y = b.node();
  if (&x == &y) return 0;
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  switch (x.kind) {
    case Kind::Rational:
      if (x.value == y.value) return 0;
      return x.value < y.value ? -1 : 1;
    case Kind::NamedConst:
      return x.name.compare(y.name) < 0 ? -1 : (x.name == y.name ? 0 : 1);
    case Kind::Var:
      if (x.coord == y.coord) return 0;
      return x.coord < y.coord ? -1 : 1;
    case Kind::Power: {
      const int c = compare(x.children[0], y.children[0]);
      if (c != 0) return c;
      if (x.value == y.value) return 0;
      return x.value < y.value ? -1 : 1;
    }
    case Kind::FuncApp: {
      if (x.name != y.name) return x.name < y.name ? -1 : 1;
      if (x.orders != y.orders) return x.orders < y.orders ? -1 : 1;
      break;
    }
    default:
      break;
  }
  const std::size_t n = std::min(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(x.children[i], y.children[i]);
    if (c != 0) return c;
  }
  if (x.children.size() == y.children.size()) return 0;
  return x.children.size() < y.children.size() ? -1 : 1;
}

Expr rawNamed(std::string name)
{
  Node n;
  n.kind = Kind::NamedConst;
  n.name = std::move(name);
  return detail::finish(std::move(n), true);
}

Expr rawVar(JetCoord c)
{
  Node n;
  n.kind = Kind::Var;
  n.coord = c;
  return detail::finish(std::move(n), true);
}

Expr rawFunc(std::string name, std::vector<Expr> args, std::vector<int> orders)
{
  return detail::makeFunc(std::move(name), std::move(args), std::move(orders), false);
}

Expr rawSum(std::vector<Expr> terms) { return detail::makeNode(Kind::Sum, std::move(terms), false); }
Expr rawProduct(std::vector<Expr> factors) { return detail::makeNode(Kind::Product, std::move(factors), false); }
Expr rawPower(Expr base, Rational exponent) { return detail::makePower(std::move(base), exponent, false); }
Expr rawExp(Expr arg) { return detail::makeNode(Kind::Exp, {std::move(arg)}, false); }
Expr rawLn(Expr arg) { return detail::makeNode(Kind::Ln, {std::move(arg)}, false); }
Expr rawNeg(Expr arg) { return detail::makeNode(Kind::Neg, {std::move(arg)}, false); }

Expr named(std::string name) { return rawNamed(std::move(name)); }
Expr var(JetCoord c) { return rawVar(c); }

Expr func(std::string name, std::vector<Expr> args, std::vector<int> orders)
{
  return simplify(rawFunc(std::move(name), std::move(args), std::move(orders)));
}

Expr sum(std::vector<Expr> terms) { return simplify(rawSum(std::move(terms))); }
Expr product(std::vector<Expr> factors) { return simplify(rawProduct(std::move(factors))); }
Expr pow(const Expr& base, Rational exponent) { return simplify(rawPower(base, exponent)); }
Expr exp(const Expr& arg) { return simplify(rawExp(arg)); }
Expr ln(const Expr& arg) { return simplify(rawLn(arg)); }

Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return sum({a, rawNeg(b)}); }
Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return product({a, rawPower(b, Rational(-1))}); }
Expr operator-(const Expr& a) { return simplify(rawNeg(a)); }

Expr substitute(const Expr& e, const std::map<JetCoord, Expr>& replacements)
{
  CoordMask targets;
  for (const auto& [c, _] : replacements) targets.set(static_cast<std::size_t>(c));
  std::function<Expr(const Expr&)> go = [&](const Expr& x) -> Expr {
    if ((x.coords() & targets).none()) return x;
    const Node& n = x.node();
    if (n.kind == Kind::Var) return replacements.at(n.coord);
    std::vector<Expr> kids;
    kids.reserve(n.children.size());
    for (const auto& c : n.children) kids.push_back(go(c));
    switch (n.kind) {
      case Kind::Power: return pow(kids[0], n.value);
      case Kind::FuncApp: return func(n.name, std::move(kids), n.orders);
      case Kind::Sum: return sum(std::move(kids));
      case Kind::Product: return product(std::move(kids));
      case Kind::Exp: return exp(kids[0]);
      case Kind::Ln: return ln(kids[0]);
      case Kind::Neg: return -kids[0];
      default: return x;
    }
  };
  return go(simplify(e));
}

Expr substitute(const Expr& e, JetCoord c, const Expr& replacement) { return substitute(e, {{c, replacement}}); }

Expr substituteNamed(const Expr& e, const std::map<std::string, Expr>& replacements)
{
  std::function<Expr(const Expr&)> go = [&](const Expr& x) -> Expr {
    const Node& n = x.node();
    if (n.kind == Kind::NamedConst) {
      auto it = replacements.find(n.name);
      return it == replacements.end() ? x : it->second;
    }
    if (n.children.empty()) return x;
    std::vector<Expr> kids;
    kids.reserve(n.children.size());
    for (const auto& c : n.children) kids.push_back(go(c));
    switch (n.kind) {
      case Kind::Power: return pow(kids[0], n.value);
      case Kind::FuncApp: return func(n.name, std::move(kids), n.orders);
      case Kind::Sum: return sum(std::move(kids));
      case Kind::Product: return product(std::move(kids));
      case Kind::Exp: return exp(kids[0]);
      case Kind::Ln: return ln(kids[0]);
      case Kind::Neg: return -kids[0];
      default: return x;
    }
  };
  return go(simplify(e));
}

namespace {

void collectNames(const Expr& e, Kind kind, std::set<std::string>& out)
{
  const Node& n = e.node();
  if (n.kind == kind) out.insert(n.name);
  for (const auto& c : n.children) collectNames(c, kind, out);
}

}  // namespace

std::vector<std::string> namedConstants(const Expr& e)
{
  std::set<std::string> s;
  collectNames(e, Kind::NamedConst, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> functionSymbols(const Expr& e)
{
  std::set<std::string> s;
  collectNames(e, Kind::FuncApp, s);
  return {s.begin(), s.end()};
}

std::size_t treeSize(const Expr& e)
{
  std::size_t n = 1;
  for (const auto& c : e.children()) n += treeSize(c);
  return n;
}

}  // namespace symlie
