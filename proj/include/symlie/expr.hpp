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
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlie/rational.hpp"

namespace symlie {

/// Coordinates of the truncated second-order jet space, plus u_xxx which
/// on-shell elimination of u_xt produces.
enum class JetCoord : std::uint8_t { x, t, u, u_x, u_t, u_xx, u_xt, u_tt, u_xxx };

inline constexpr std::size_t kJetCoordCount = 9;
inline constexpr std::array<JetCoord, kJetCoordCount> kAllJetCoords = {
    JetCoord::x,  JetCoord::t,  JetCoord::u,  JetCoord::u_x,   JetCoord::u_t,
    JetCoord::u_xx, JetCoord::u_xt, JetCoord::u_tt, JetCoord::u_xxx};

std::string_view toString(JetCoord c) noexcept;
std::optional<JetCoord> jetCoordFromName(std::string_view name) noexcept;

using CoordMask = std::bitset<kJetCoordCount>;

inline CoordMask maskOf(JetCoord c) { return CoordMask().set(static_cast<std::size_t>(c)); }

/// Node kinds. The enumerator order is the canonical rank used when
/// sorting the children of sums and products.
enum class Kind : std::uint8_t { Rational, NamedConst, Var, Neg, Power, Product, FuncApp, Exp, Ln, Sum };

struct Node;

/// Immutable symbolic expression. Copies share the underlying tree, so
/// values are cheap to pass around and safe to read from many threads.
///
/// The arithmetic operators and builder functions return canonical
/// (simplified) trees; the raw* builders keep the exact shape given and
/// exist for the parser and for tests that need unsimplified input.
class Expr {
 public:
  Expr();  // the constant 0
  Expr(Rational r);  // NOLINT(google-explicit-constructor)
  Expr(std::int64_t v) : Expr(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Expr(int v) : Expr(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  const Node& node() const noexcept { return *node_; }
  Kind kind() const noexcept;

  bool isRational() const noexcept { return kind() == Kind::Rational; }
  bool isZero() const noexcept;
  bool isOne() const noexcept;
  const Rational& rational() const;  // requires isRational()

  /// JetCoords occurring anywhere in the tree (including function arguments).
  const CoordMask& coords() const noexcept;
  bool dependsOn(JetCoord c) const noexcept { return coords().test(static_cast<std::size_t>(c)); }

  const std::vector<Expr>& children() const noexcept;
  std::size_t hash() const noexcept;
  bool isCanonical() const noexcept;

  friend bool operator==(const Expr& a, const Expr& b) noexcept;
  friend bool operator!=(const Expr& a, const Expr& b) noexcept { return !(a == b); }

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind = Kind::Rational;
  Rational value;              // Rational: the value; Power: the exponent
  JetCoord coord = JetCoord::x;  // Var
  std::string name;            // NamedConst, FuncApp
  std::vector<Expr> children;  // operands; FuncApp: arguments; Power: {base}
  std::vector<int> orders;     // FuncApp: derivative order per argument
  CoordMask coords;
  std::size_t hash = 0;
  bool canonical = false;
};

/// Total structural order; the canonical form sorts by it.
int compare(const Expr& a, const Expr& b) noexcept;

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const noexcept { return compare(a, b) < 0; }
};

// -- raw constructors (no simplification) ---------------------------------
Expr rawNamed(std::string name);
Expr rawVar(JetCoord c);
Expr rawFunc(std::string name, std::vector<Expr> args, std::vector<int> orders = {});
Expr rawSum(std::vector<Expr> terms);
Expr rawProduct(std::vector<Expr> factors);
Expr rawPower(Expr base, Rational exponent);
Expr rawExp(Expr arg);
Expr rawLn(Expr arg);
Expr rawNeg(Expr arg);

// -- canonical builders -----------------------------------------------------
Expr named(std::string name);
Expr var(JetCoord c);
Expr func(std::string name, std::vector<Expr> args, std::vector<int> orders = {});
Expr sum(std::vector<Expr> terms);
Expr product(std::vector<Expr> factors);
Expr pow(const Expr& base, Rational exponent);
Expr exp(const Expr& arg);
Expr ln(const Expr& arg);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
inline Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
inline Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
inline Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

/// Canonical form: exact constant folding, flattening, like-term and
/// like-factor collection, sorted children. Conservative: no
/// transcendental identities beyond exp(0)=1, ln(1)=0 and (e^a)^q=e^{qa}.
Expr simplify(const Expr& e);

/// Distributes products over sums and expands positive integer powers of
/// sums, recursively (including inside function arguments), then
/// simplifies. Polynomial identities in the atoms cancel exactly.
Expr expand(const Expr& e);

/// Rewrites products of exponentials exp(a)*exp(b) as exp(a+b).
Expr combineExponentials(const Expr& e);

/// Simultaneous substitution of jet coordinates.
Expr substitute(const Expr& e, const std::map<JetCoord, Expr>& replacements);
Expr substitute(const Expr& e, JetCoord c, const Expr& replacement);

/// Simultaneous substitution of named constants.
Expr substituteNamed(const Expr& e, const std::map<std::string, Expr>& replacements);

/// Names of the named constants and function symbols in e.
std::vector<std::string> namedConstants(const Expr& e);
std::vector<std::string> functionSymbols(const Expr& e);

/// Exact partial derivative with all other jet coordinates held fixed.
/// Function applications differentiate by the chain rule, incrementing
/// the derivative order of each argument slot.
Expr diffPartial(const Expr& e, JetCoord v);

/// Number of nodes in the tree.
std::size_t treeSize(const Expr& e);

struct PrintOptions {
  /// Display names overriding the default coordinate names.
  std::map<JetCoord, std::string> rename;
};

/// Text in the parser grammar; parse(toString(e)) == e for canonical e.
std::string toString(const Expr& e, const PrintOptions& opts = {});

}  // namespace symlie
