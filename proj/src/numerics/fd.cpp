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
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>

#include "symlie/errors.hpp"
#include "symlie/numerics.hpp"

namespace symlie {

namespace {

// A coefficient that mentions u symbolically may still be independent of
// it numerically (e.g. a family function with a constant body).
void requireIndependentOfU(const EvolutionPDE& pde, const Grid& grid)
{
  const CoordMask base = maskOf(JetCoord::x) | maskOf(JetCoord::t) | maskOf(JetCoord::u);
  for (const Expr* c : {&pde.A, &pde.B, &pde.C}) {
    if ((c->coords() & ~base).any())
      throw PreconditionError("coefficient depends on a derivative coordinate: " + toString(*c));
    if (!c->dependsOn(JetCoord::u)) continue;
    Assignment a = pde.bindings();
    for (int j = 0; j <= grid.nx + 1; j += std::max(1, (grid.nx + 1) / 16))
      for (double t : {0.0, 0.5 * grid.tEnd, grid.tEnd}) {
        a.set(JetCoord::x, grid.x(j)).set(JetCoord::t, t);
        const double v1 = eval(*c, a.set(JetCoord::u, 0.3));
        const double v2 = eval(*c, a.set(JetCoord::u, 1.7));
        if (std::abs(v1 - v2) > 1e-12 * (1.0 + std::abs(v1)))
          throw UnsupportedError("finite-difference solver needs coefficients independent of u: " + toString(*c));
      }
  }
}

void requireParabolic(const kernels::CoefficientSlice& s, double t)
{
  for (std::size_t j = 0; j < s.a.size(); ++j)
    if (!(s.a[j] > 0.0))
      throw PreconditionError("A must be positive on the grid (node " + std::to_string(j) + ", t = " +
                              std::to_string(t) + ")");
}

}  // namespace

void Grid::validate() const
{
  if (nx < 8 || nt < 8) throw PreconditionError("grid needs nx >= 8 and nt >= 8");
  if (!(xMin > 0.0) || !(xMax > xMin)) throw PreconditionError("grid needs 0 < xMin < xMax");
  if (!(tEnd > 0.0)) throw PreconditionError("grid needs tEnd > 0");
}

void FDSolution::writeCsv(std::ostream& os) const
{
  os << "t,x,u\n";
  char buf[96];
  for (int n = 0; n <= grid.nt; ++n)
    for (int j = 0; j <= grid.nx + 1; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.t(n), grid.x(j), at(n, j));
      os << buf;
    }
}

BoundaryData boundaryFrom(const AnalyticSolution& sol, double xMin, double xMax)
{
  Assignment base;
  for (const auto& [k, v] : sol.constants) base.setConstant(k, v);
  const auto at = [u = sol.u, base](double x, double t) {
    Assignment a = base;
    return eval(u, a.set(JetCoord::x, x).set(JetCoord::t, t));
  };
  return {[at](double x) { return at(x, 0.0); }, [at, xMin](double t) { return at(xMin, t); },
          [at, xMax](double t) { return at(xMax, t); }};
}

FDSolution solveFD(const EvolutionPDE& pde, const BoundaryData& data, const Grid& grid)
{
  grid.validate();
  if (!data.initial || !data.left || !data.right) throw PreconditionError("initial and boundary data required");
  requireIndependentOfU(pde, grid);

  const int nx = grid.nx;
  const std::size_t width = static_cast<std::size_t>(nx) + 2;
  const double dx = grid.dx();
  const double dt = grid.dt();
  const bool timeDependent = pde.A.dependsOn(JetCoord::t) || pde.B.dependsOn(JetCoord::t) || pde.C.dependsOn(JetCoord::t);

  FDSolution sol;
  sol.grid = grid;
  sol.values.assign(width * (grid.nt + 1), 0.0);
  sol.diagnostics.minDiagonalMargin = std::numeric_limits<double>::infinity();

  double* u0 = sol.values.data();
  for (std::size_t j = 1; j + 1 < width; ++j) u0[j] = data.initial(grid.x(static_cast<int>(j)));
  u0[0] = data.left(0.0);
  u0[width - 1] = data.right(0.0);

  kernels::CoefficientSlice now, next;
  kernels::sampleCoefficients(pde, grid, 0.0, now);
  requireParabolic(now, 0.0);
  if (!timeDependent) next = now;

  kernels::TridiagonalSystem sys;
  for (int n = 0; n < grid.nt; ++n) {
    const double tNext = grid.t(n + 1);
    if (timeDependent) {
      kernels::sampleCoefficients(pde, grid, tNext, next);
      requireParabolic(next, tNext);
    }
    const std::span<const double> uNow(sol.values.data() + n * width, width);
    double* uNext = sol.values.data() + (n + 1) * width;
    uNext[0] = data.left(tNext);
    uNext[width - 1] = data.right(tNext);

    kernels::assembleCrankNicolson(now, next, uNow, uNext[0], uNext[width - 1], dx, dt, sys);
    for (std::size_t i = 0; i < sys.diag.size(); ++i)
      sol.diagnostics.minDiagonalMargin = std::min(
          sol.diagnostics.minDiagonalMargin,
          std::abs(sys.diag[i]) - (i > 0 ? std::abs(sys.lower[i]) : 0.0) -
              (i + 1 < sys.diag.size() ? std::abs(sys.upper[i]) : 0.0));
    if (!kernels::solveTridiagonal(sys, std::span<double>(uNext + 1, width - 2)))
      throw NumericalError("singular tridiagonal system at step " + std::to_string(n + 1));
    for (std::size_t j = 0; j < width; ++j) {
      if (!std::isfinite(uNext[j])) throw NumericalError("non-finite value at step " + std::to_string(n + 1));
      sol.diagnostics.maxAbsValue = std::max(sol.diagnostics.maxAbsValue, std::abs(uNext[j]));
    }
    if (timeDependent) std::swap(now, next);
  }
  for (std::size_t j = 0; j < width; ++j)
    sol.diagnostics.maxAbsValue = std::max(sol.diagnostics.maxAbsValue, std::abs(u0[j]));
  return sol;
}

ErrorReport compare(const FDSolution& fd, const AnalyticSolution& exact)
{
  Assignment base;
  for (const auto& [k, v] : exact.constants) base.setConstant(k, v);
  const Grid& g = fd.grid;

  ErrorReport rep;
  rep.grid = g;
  rep.perSlice.assign(g.nt + 1, 0.0);
  double sq = 0.0;
  for (int n = 0; n <= g.nt; ++n) {
    Assignment a = base;
    a.set(JetCoord::t, g.t(n));
    for (int j = 0; j <= g.nx + 1; ++j) {
      a.set(JetCoord::x, g.x(j));
      const double e = std::abs(fd.at(n, j) - eval(exact.u, a));
      rep.perSlice[n] = std::max(rep.perSlice[n], e);
      sq += e * e;
    }
    rep.maxNorm = std::max(rep.maxNorm, rep.perSlice[n]);
  }
  rep.l2 = std::sqrt(sq * g.dx() * g.dt());
  return rep;
}

ConvergenceReport convergenceStudy(const EvolutionPDE& pde, const AnalyticSolution& exact, const Grid& base,
                                   int levels)
{
  if (levels < 3) throw PreconditionError("convergence study needs at least 3 levels");
  base.validate();

  std::vector<Grid> grids{base};
  for (int k = 1; k < levels; ++k) grids.push_back(grids.back().refined());

  const BoundaryData data = boundaryFrom(exact, base.xMin, base.xMax);

  ConvergenceReport rep;
  rep.levels.resize(grids.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < grids.size(); ++k) {
    try {
      const ErrorReport e = compare(solveFD(pde, data, grids[k]), exact);
      rep.levels[k] = {grids[k], grids[k].dx(), grids[k].dt(), e.maxNorm, e.l2};
    } catch (...) {
#pragma omp critical(symlie_convergence_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  for (std::size_t k = 0; k + 1 < rep.levels.size(); ++k) {
    const double r = rep.levels[k].maxNorm / rep.levels[k + 1].maxNorm;
    rep.ratios.push_back(r);
    rep.orders.push_back(std::log2(r));
  }
  return rep;
}

}  // namespace symlie
