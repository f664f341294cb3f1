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

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlie/expr.hpp"
#include "symlie/parse.hpp"

namespace symlie {

/// A concrete function bound to an abstract function symbol. Must supply
/// every partial derivative that evaluation asks for.
class Function {
 public:
  virtual ~Function() = default;
  virtual std::size_t arity() const = 0;
  /// Value of the mixed partial derivative with the given per-argument orders.
  virtual double value(std::span<const double> args, std::span<const int> orders) const = 0;
};

/// Function given by a closed-form body. Argument slot i is represented
/// in the body by the jet coordinate kSlots[i] (x, t, u), so derivatives
/// come from diffPartial and are exact.
class ExprFunction final : public Function {
 public:
  static constexpr std::array<JetCoord, 3> kSlots = {JetCoord::x, JetCoord::t, JetCoord::u};

  ExprFunction(Expr body, std::size_t arity);

  /// Parses the body with the given slot names, e.g. ("1 + b/4", {"a", "b"}).
  static std::shared_ptr<ExprFunction> fromText(std::string_view body, const std::vector<std::string>& slotNames);

  std::size_t arity() const override { return arity_; }
  double value(std::span<const double> args, std::span<const int> orders) const override;

  const Expr& body() const { return body_; }
  /// Symbolic derivative body for the given orders.
  Expr derivative(std::span<const int> orders) const;
  /// Body text using the given slot names.
  std::string toString(const std::vector<std::string>& slotNames) const;

 private:
  static constexpr int kCachedOrder = 4;

  Expr body_;
  std::size_t arity_;
  std::map<std::vector<int>, Expr> cache_;  // all multi-indices of total order <= kCachedOrder
};

using FunctionTable = std::map<std::string, std::shared_ptr<const Function>>;

/// Values for jet coordinates and named constants plus function bindings.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(FunctionTable functions) : functions_(std::move(functions)) {}

  Assignment& set(JetCoord c, double v)
  {
    coords_[static_cast<std::size_t>(c)] = v;
    return *this;
  }
  Assignment& setConstant(const std::string& name, double v)
  {
    constants_[name] = v;
    return *this;
  }
  Assignment& bind(const std::string& name, std::shared_ptr<const Function> f)
  {
    functions_[name] = std::move(f);
    return *this;
  }
  /// Sets a coordinate ("x", "u_xx") or a named constant ("c1") by name.
  Assignment& setByName(const std::string& name, double v);

  std::optional<double> coord(JetCoord c) const { return coords_[static_cast<std::size_t>(c)]; }
  const std::map<std::string, double>& constants() const { return constants_; }
  const FunctionTable& functions() const { return functions_; }
  const Function* function(const std::string& name) const;

  /// name=value list of the bound coordinates and constants.
  std::map<std::string, double> values() const;

 private:
  std::array<std::optional<double>, kJetCoordCount> coords_{};
  std::map<std::string, double> constants_;
  FunctionTable functions_;
};

/// Evaluates e in double precision. Throws UnboundSymbolError or DomainError.
double eval(const Expr& e, const Assignment& a);

}  // namespace symlie
