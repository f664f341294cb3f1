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

#include <string>
#include <utility>

#include "symlie/expr.hpp"

namespace symlie {

namespace {

// Binding strength of the printed form; an operand is parenthesized when
// its level is below what the enclosing position requires.
enum Level : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

struct Printed {
  std::string text;
  int level;
};

class Printer {
 public:
  explicit Printer(const PrintOptions& opts) : opts_(opts) {}

  Printed print(const Expr& e) const
  {
    const Node& n = e.node();
    switch (n.kind) {
      case Kind::Rational: return rational(n.value);
      case Kind::NamedConst: return {n.name, kAtom};
      case Kind::Var: return {coordName(n.coord), kAtom};
      case Kind::Neg: return {"-" + wrap(n.children[0], kPower), kUnary};
      case Kind::Power: return power(n.children[0], n.value);
      case Kind::Product: return productText(e);
      case Kind::Sum: return sumText(e);
      case Kind::Exp: return {"exp(" + print(n.children[0]).text + ")", kAtom};
      case Kind::Ln: return {"ln(" + print(n.children[0]).text + ")", kAtom};
      case Kind::FuncApp: return funcText(n);
    }
    return {"?", kAtom};
  }

 private:
  std::string coordName(JetCoord c) const
  {
    auto it = opts_.rename.find(c);
    return it == opts_.rename.end() ? std::string(toString(c)) : it->second;
  }

  static Printed rational(const Rational& r)
  {
    if (r.isNegative()) return {r.toString(), kUnary};
    return {r.toString(), r.isInteger() ? kAtom : kProduct};
  }

  std::string wrap(const Expr& e, int required) const
  {
    Printed p = print(e);
    if (p.level < required) return "(" + p.text + ")";
    return p.text;
  }

  Printed power(const Expr& base, const Rational& q) const
  {
    if (q.isNegative()) {
      const Rational m = -q;
      return {"1/" + (m.isOne() ? wrap(base, kPower) : power(base, m).text), kProduct};
    }
    std::string text = wrap(base, kAtom) + "^";
    if (q.isInteger()) text += q.toString();
    else text += "(" + q.toString() + ")";
    return {text, kPower};
  }

  Printed funcText(const Node& n) const
  {
    std::string text = n.name;
    bool derivative = false;
    for (int o : n.orders) derivative |= o != 0;
    if (derivative) {
      text += "[";
      for (std::size_t i = 0; i < n.orders.size(); ++i) text += (i ? "," : "") + std::to_string(n.orders[i]);
      text += "]";
    }
    text += "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) text += (i ? ", " : "") + print(n.children[i]).text;
    return {text + ")", kAtom};
  }

  Printed productText(const Expr& e) const
  {
    const auto& kids = e.children();
    Rational coeff(1);
    std::size_t first = 0;
    if (!kids.empty() && kids.front().isRational()) {
      coeff = kids.front().rational();
      first = 1;
    }
    std::string num;
    std::string den;
    const Rational mag = coeff.abs();
    if (mag.num() != 1) num = std::to_string(mag.num());
    if (mag.den() != 1) den += "/" + std::to_string(mag.den());
    for (std::size_t i = first; i < kids.size(); ++i) {
      const Expr& f = kids[i];
      if (f.kind() == Kind::Power && f.node().value.isNegative()) {
        const Rational q = -f.node().value;
        if (q.isOne()) den += "/" + wrap(f.children()[0], kPower);
        else den += "/" + power(f.children()[0], q).text;
        continue;
      }
      if (!num.empty()) num += "*";
      num += wrap(f, kUnary);
    }
    if (num.empty()) num = "1";
    const bool negative = coeff.isNegative();
    return {(negative ? "-" : "") + num + den, negative ? kUnary : kProduct};
  }

  static bool isNegativeTerm(const Expr& t)
  {
    switch (t.kind()) {
      case Kind::Neg: return true;
      case Kind::Rational: return t.rational().isNegative();
      case Kind::Product: return t.children().front().isRational() && t.children().front().rational().isNegative();
      default: return false;
    }
  }

  Printed sumText(const Expr& e) const
  {
    std::string text;
    bool first = true;
    for (const auto& t : e.children()) {
      if (first) {
        text = wrap(t, kProduct);
        first = false;
        continue;
      }
      if (isNegativeTerm(t)) text += " - " + wrap(-t, kProduct);
      else text += " + " + wrap(t, kProduct);
    }
    return {text, kSum};
  }

  const PrintOptions& opts_;
};

}  // namespace

std::string toString(const Expr& e, const PrintOptions& opts) { return Printer(opts).print(e).text; }

}  // namespace symlie
