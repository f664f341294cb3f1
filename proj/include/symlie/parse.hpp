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

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "symlie/expr.hpp"

namespace symlie {

/// Grammar (whitespace-insensitive):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?            right-associative
///   primary := number | coord | constant | call | '(' expr ')'
///   call    := ('exp' | 'ln') '(' expr ')'
///            | fname ('[' int (',' int)* ']')? '(' expr (',' expr)* ')'
///
/// coord is one of x t u u_x u_t u_xx u_xt u_tt u_xxx, constant is c1..c9,
/// numbers are decimal literals converted exactly to rationals. The
/// optional bracket after a function name gives derivative orders per
/// argument. Exponents must reduce to rational constants.
struct ParseOptions {
  std::set<std::string> functions = {"f", "g", "h"};
  /// Extra identifiers that stand for jet coordinates (e.g. "a" -> x).
  std::map<std::string, JetCoord> aliases;
};

/// Parses without simplification.
Expr parseRaw(std::string_view text, const ParseOptions& opts = {});

/// Parses and returns the canonical expression.
Expr parse(std::string_view text, const ParseOptions& opts = {});

}  // namespace symlie
