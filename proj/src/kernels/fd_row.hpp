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

#include "symlie/numerics.hpp"

namespace symlie::kernels::detail {

// Row i (node j = i + 1) of the Crank-Nicolson system. Shared by the
// parallel and serial assemblers so both produce identical bits.
inline void crankNicolsonRow(std::size_t i, const CoefficientSlice& now, const CoefficientSlice& next,
                             std::span<const double> u, double leftNext, double rightNext, double dx, double dt,
                             TridiagonalSystem& out)
{
  const std::size_t j = i + 1;
  const double idx2 = 1.0 / (dx * dx);
  const double i2dx = 0.5 / dx;
  const double half = 0.5 * dt;

  const double loN = now.a[j] * idx2 - now.b[j] * i2dx;
  const double diN = -2.0 * now.a[j] * idx2 + now.c[j];
  const double upN = now.a[j] * idx2 + now.b[j] * i2dx;
  const double loP = next.a[j] * idx2 - next.b[j] * i2dx;
  const double diP = -2.0 * next.a[j] * idx2 + next.c[j];
  const double upP = next.a[j] * idx2 + next.b[j] * i2dx;

  out.lower[i] = -half * loP;
  out.diag[i] = 1.0 - half * diP;
  out.upper[i] = -half * upP;
  double r = u[j] + half * (loN * u[j - 1] + diN * u[j] + upN * u[j + 1]);
  if (i == 0) r += half * loP * leftNext;
  if (j + 2 == u.size()) r += half * upP * rightNext;
  out.rhs[i] = r;
}

inline void resize(std::size_t n, TridiagonalSystem& out)
{
  out.lower.resize(n);
  out.diag.resize(n);
  out.upper.resize(n);
  out.rhs.resize(n);
}

inline void coefficientNode(const EvolutionPDE& pde, const Assignment& base, double x, double t, std::size_t j,
                            CoefficientSlice& out)
{
  Assignment a = base;
  a.set(JetCoord::x, x).set(JetCoord::t, t);
  out.a[j] = eval(pde.A, a);
  out.b[j] = eval(pde.B, a);
  out.c[j] = eval(pde.C, a);
}

inline void resize(std::size_t n, CoefficientSlice& out)
{
  out.a.resize(n);
  out.b.resize(n);
  out.c.resize(n);
}

// u is fixed at 1: callers only pass coefficients proven independent of u.
inline Assignment coefficientBase(const EvolutionPDE& pde)
{
  Assignment a = pde.bindings();
  a.set(JetCoord::u, 1.0);
  return a;
}

}  // namespace symlie::kernels::detail
