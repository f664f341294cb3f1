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

// Internal node constructors shared by the expression translation units.

#include <string>
#include <vector>

#include "symlie/expr.hpp"

namespace symlie::detail {

Expr finish(Node n, bool canonical);
Expr makeRational(Rational r);
Expr makeNode(Kind k, std::vector<Expr> children, bool canonical);
Expr makePower(Expr base, Rational q, bool canonical);
Expr makeFunc(std::string name, std::vector<Expr> args, std::vector<int> orders, bool canonical);

}  // namespace symlie::detail
