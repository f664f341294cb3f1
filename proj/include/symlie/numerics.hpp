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

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symlie/models.hpp"
#include "symlie/pde.hpp"

namespace symlie {

/// Uniform grid: x_j = xMin + j dx for j = 0..nx+1 (nx interior points),
/// t_n = n dt for n = 0..nt.
struct Grid {
  double xMin = 0.2;
  double xMax = 3.0;
  int nx = 399;
  double tEnd = 1.0;
  int nt = 400;

  double dx() const { return (xMax - xMin) / (nx + 1); }
  double dt() const { return tEnd / nt; }
  double x(int j) const { return xMin + j * dx(); }
  double t(int n) const { return n * dt(); }
  /// Both spacings halved: nx + 1 and nt doubled.
  Grid refined() const { return {xMin, xMax, 2 * (nx + 1) - 1, tEnd, 2 * nt}; }
  /// Throws PreconditionError unless nx >= 8, nt >= 8, 0 < xMin < xMax, tEnd > 0.
  void validate() const;
};

struct FDDiagnostics {
  /// Smallest min_j |diag_j| - |lower_j| - |upper_j| over the implicit systems.
  double minDiagonalMargin = 0.0;
  double maxAbsValue = 0.0;
};

struct FDSolution {
  Grid grid;
  std::vector<double> values;  // (nt + 1) x (nx + 2), row-major in time
  std::string scheme = "crank-nicolson";
  FDDiagnostics diagnostics;

  double at(int n, int j) const { return values[static_cast<std::size_t>(n) * (grid.nx + 2) + j]; }
  std::span<const double> slice(int n) const
  {
    return {values.data() + static_cast<std::size_t>(n) * (grid.nx + 2), static_cast<std::size_t>(grid.nx + 2)};
  }
  /// Columns t,x,u.
  void writeCsv(std::ostream& os) const;
};

struct BoundaryData {
  std::function<double(double)> initial;  // u(x, 0)
  std::function<double(double)> left;     // u(xMin, t)
  std::function<double(double)> right;    // u(xMax, t)
};

/// Initial and Dirichlet data taken from sol (constants bound).
BoundaryData boundaryFrom(const AnalyticSolution& sol, double xMin, double xMax);

/// Crank-Nicolson for u_t = A u_xx + B u_x + C u with centered differences
/// and Dirichlet data. A, B, C must not depend on u and A must be positive
/// on the grid.
FDSolution solveFD(const EvolutionPDE& pde, const BoundaryData& data, const Grid& grid);

struct ErrorReport {
  double maxNorm = 0.0;
  double l2 = 0.0;  // sqrt(sum e^2 dx dt)
  std::vector<double> perSlice;  // max |e| at each time level
  Grid grid;
};

ErrorReport compare(const FDSolution& fd, const AnalyticSolution& exact);

struct ConvergenceLevel {
  Grid grid;
  double h = 0.0;
  double dt = 0.0;
  double maxNorm = 0.0;
  double l2 = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> ratios;  // maxNorm[i] / maxNorm[i + 1]
  std::vector<double> orders;  // log2 of ratios
};

/// levels >= 3 solves, each refining both spacings by 2.
ConvergenceReport convergenceStudy(const EvolutionPDE& pde, const AnalyticSolution& exact, const Grid& base,
                                   int levels);

namespace kernels {

/// A, B, C sampled at the nodes of one time level.
struct CoefficientSlice {
  std::vector<double> a, b, c;
};

/// Fills out for x_0..x_{nx+1} at time t. OpenMP over nodes.
void sampleCoefficients(const EvolutionPDE& pde, const Grid& grid, double t, CoefficientSlice& out);
void sampleCoefficientsRef(const EvolutionPDE& pde, const Grid& grid, double t, CoefficientSlice& out);

/// Interior tridiagonal system of one Crank-Nicolson step, for unknowns
/// j = 1..nx. Boundary values at the new level are folded into rhs.
struct TridiagonalSystem {
  std::vector<double> lower, diag, upper, rhs;
};

void assembleCrankNicolson(const CoefficientSlice& now, const CoefficientSlice& next, std::span<const double> uNow,
                           double leftNext, double rightNext, double dx, double dt, TridiagonalSystem& out);
void assembleCrankNicolsonRef(const CoefficientSlice& now, const CoefficientSlice& next,
                              std::span<const double> uNow, double leftNext, double rightNext, double dx, double dt,
                              TridiagonalSystem& out);

/// Thomas algorithm; returns false on a vanishing or non-finite pivot.
bool solveTridiagonal(TridiagonalSystem& sys, std::span<double> x);

}  // namespace kernels

}  // namespace symlie
