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

#include "symlie/eval.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

void enumerateOrders(std::size_t arity, int maxTotal, std::vector<int>& cur, std::size_t slot,
                     std::vector<std::vector<int>>& out)
{
  if (slot == arity) {
    out.push_back(cur);
    return;
  }
  const int used = std::accumulate(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(slot), 0);
  for (int k = 0; used + k <= maxTotal; ++k) {
    cur[slot] = k;
    enumerateOrders(arity, maxTotal, cur, slot + 1, out);
  }
  cur[slot] = 0;
}

Expr differentiate(const Expr& body, std::span<const int> orders)
{
  Expr d = body;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (int k = 0; k < orders[i]; ++k) d = diffPartial(d, ExprFunction::kSlots[i]);
  return d;
}

double power(double base, const Rational& q)
{
  if (base == 0.0 && q.isNegative()) throw DomainError("negative power of zero");
  if (q.isInteger()) {
    const auto n = q.num();
    if (n >= -4 && n <= 4) {
      double r = 1.0;
      const double b = n < 0 ? 1.0 / base : base;
      for (int i = 0; i < std::abs(static_cast<int>(n)); ++i) r *= b;
      return r;
    }
    return std::pow(base, static_cast<double>(n));
  }
  if (base < 0.0) throw DomainError("fractional power of a negative value");
  return std::pow(base, q.toDouble());
}

class Evaluator {
 public:
  explicit Evaluator(const Assignment& a) : a_(a) {}

  double operator()(const Expr& e) const
  {
    const Node& n = e.node();
    switch (n.kind) {
      case Kind::Rational: return n.value.toDouble();
      case Kind::NamedConst: {
        auto it = a_.constants().find(n.name);
        if (it == a_.constants().end()) throw UnboundSymbolError("unbound constant '" + n.name + "'");
        return it->second;
      }
      case Kind::Var: {
        auto v = a_.coord(n.coord);
        if (!v) throw UnboundSymbolError("unbound coordinate '" + std::string(toString(n.coord)) + "'");
        return *v;
      }
      case Kind::Neg: return -(*this)(n.children[0]);
      case Kind::Sum: {
        double s = 0.0;
        for (const auto& c : n.children) s += (*this)(c);
        return s;
      }
      case Kind::Product: {
        double p = 1.0;
        for (const auto& c : n.children) p *= (*this)(c);
        return p;
      }
      case Kind::Power: return power((*this)(n.children[0]), n.value);
      case Kind::Exp: return std::exp((*this)(n.children[0]));
      case Kind::Ln: {
        const double v = (*this)(n.children[0]);
        if (!(v > 0.0)) throw DomainError("ln of non-positive value " + std::to_string(v));
        return std::log(v);
      }
      case Kind::FuncApp: {
        const Function* f = a_.function(n.name);
        if (f == nullptr) throw UnboundSymbolError("unbound function '" + n.name + "'");
        if (f->arity() != n.children.size())
          throw UnboundSymbolError("function '" + n.name + "' bound with arity " + std::to_string(f->arity()) +
                                   " but applied to " + std::to_string(n.children.size()) + " arguments");
        std::array<double, 8> buf{};
        std::vector<double> heap;
        double* args = buf.data();
        if (n.children.size() > buf.size()) {
          heap.resize(n.children.size());
          args = heap.data();
        }
        for (std::size_t i = 0; i < n.children.size(); ++i) args[i] = (*this)(n.children[i]);
        return f->value({args, n.children.size()}, n.orders);
      }
    }
    return 0.0;
  }

 private:
  const Assignment& a_;
};

}  // namespace

ExprFunction::ExprFunction(Expr body, std::size_t arity) : body_(simplify(body)), arity_(arity)
{
  if (arity == 0 || arity > kSlots.size()) throw std::invalid_argument("ExprFunction supports 1 to 3 arguments");
  for (std::size_t i = arity; i < kSlots.size(); ++i)
    if (body_.dependsOn(kSlots[i])) throw std::invalid_argument("function body uses a slot beyond its arity");
  for (JetCoord c : kAllJetCoords) {
    bool slot = false;
    for (std::size_t i = 0; i < arity; ++i) slot |= kSlots[i] == c;
    if (!slot && body_.dependsOn(c)) throw std::invalid_argument("function body uses a non-slot coordinate");
  }
  std::vector<std::vector<int>> all;
  std::vector<int> cur(arity, 0);
  enumerateOrders(arity, kCachedOrder, cur, 0, all);
  for (auto& o : all) {
    // Derive each multi-index from a cached lower-order neighbour.
    Expr d;
    auto it = cache_.end();
    for (std::size_t i = 0; i < o.size() && it == cache_.end(); ++i) {
      if (o[i] == 0) continue;
      std::vector<int> lower = o;
      --lower[i];
      it = cache_.find(lower);
      if (it != cache_.end()) d = diffPartial(it->second, kSlots[i]);
    }
    if (it == cache_.end()) d = differentiate(body_, o);
    cache_.emplace(std::move(o), std::move(d));
  }
}

std::shared_ptr<ExprFunction> ExprFunction::fromText(std::string_view body, const std::vector<std::string>& slotNames)
{
  ParseOptions opts;
  for (std::size_t i = 0; i < slotNames.size() && i < kSlots.size(); ++i) opts.aliases[slotNames[i]] = kSlots[i];
  return std::make_shared<ExprFunction>(parse(body, opts), slotNames.size());
}

Expr ExprFunction::derivative(std::span<const int> orders) const
{
  if (orders.size() != arity_) throw std::invalid_argument("derivative orders do not match function arity");
  std::vector<int> key(orders.begin(), orders.end());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  return differentiate(body_, orders);
}

double ExprFunction::value(std::span<const double> args, std::span<const int> orders) const
{
  Assignment slots;
  for (std::size_t i = 0; i < arity_; ++i) slots.set(kSlots[i], args[i]);
  std::vector<int> key(orders.begin(), orders.end());
  if (auto it = cache_.find(key); it != cache_.end()) return eval(it->second, slots);
  return eval(differentiate(body_, orders), slots);
}

std::string ExprFunction::toString(const std::vector<std::string>& slotNames) const
{
  PrintOptions opts;
  for (std::size_t i = 0; i < slotNames.size() && i < kSlots.size(); ++i) opts.rename[kSlots[i]] = slotNames[i];
  return symlie::toString(body_, opts);
}

Assignment& Assignment::setByName(const std::string& name, double v)
{
  if (auto c = jetCoordFromName(name)) return set(*c, v);
  return setConstant(name, v);
}

const Function* Assignment::function(const std::string& name) const
{
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : it->second.get();
}

std::map<std::string, double> Assignment::values() const
{
  std::map<std::string, double> out = constants_;
  for (JetCoord c : kAllJetCoords)
    if (auto v = coord(c)) out[std::string(toString(c))] = *v;
  return out;
}

double eval(const Expr& e, const Assignment& a)
{
  const double v = Evaluator(a)(e);
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  return v;
}

}  // namespace symlie
