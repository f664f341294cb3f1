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

#include <cmath>

#include "fd_row.hpp"

namespace symlie::kernels {

void sampleCoefficientsRef(const EvolutionPDE& pde, const Grid& grid, double t, CoefficientSlice& out)
{
  const std::size_t n = static_cast<std::size_t>(grid.nx) + 2;
  detail::resize(n, out);
  const Assignment base = detail::coefficientBase(pde);
  for (std::size_t j = 0; j < n; ++j) detail::coefficientNode(pde, base, grid.x(static_cast<int>(j)), t, j, out);
}

void assembleCrankNicolsonRef(const CoefficientSlice& now, const CoefficientSlice& next,
                              std::span<const double> uNow, double leftNext, double rightNext, double dx, double dt,
                              TridiagonalSystem& out)
{
  const std::size_t m = uNow.size() - 2;
  detail::resize(m, out);
  for (std::size_t i = 0; i < m; ++i) detail::crankNicolsonRow(i, now, next, uNow, leftNext, rightNext, dx, dt, out);
}

bool solveTridiagonal(TridiagonalSystem& sys, std::span<double> x)
{
  const std::size_t m = sys.diag.size();
  if (m == 0) return true;
  auto& c = sys.upper;
  auto& d = sys.rhs;
  double beta = sys.diag[0];
  if (!(std::abs(beta) > 1e-300) || !std::isfinite(beta)) return false;
  c[0] /= beta;
  d[0] /= beta;
  for (std::size_t i = 1; i < m; ++i) {
    beta = sys.diag[i] - sys.lower[i] * c[i - 1];
    if (!(std::abs(beta) > 1e-300) || !std::isfinite(beta)) return false;
    c[i] /= beta;
    d[i] = (d[i] - sys.lower[i] * d[i - 1]) / beta;
  }
  x[m - 1] = d[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return true;
}

}  // namespace symlie::kernels
