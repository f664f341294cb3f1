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

#include <exception>

#include "fd_row.hpp"

namespace symlie::kernels {

void sampleCoefficients(const EvolutionPDE& pde, const Grid& grid, double t, CoefficientSlice& out)
{
  const std::size_t n = static_cast<std::size_t>(grid.nx) + 2;
  detail::resize(n, out);
  const Assignment base = detail::coefficientBase(pde);
  std::exception_ptr err;
  std::size_t errAt = n;
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < n; ++j) {
    try {
      detail::coefficientNode(pde, base, grid.x(static_cast<int>(j)), t, j, out);
    } catch (...) {
#pragma omp critical(symlie_coeff_error)
      if (j < errAt) {
        errAt = j;
        err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

void assembleCrankNicolson(const CoefficientSlice& now, const CoefficientSlice& next, std::span<const double> uNow,
                           double leftNext, double rightNext, double dx, double dt, TridiagonalSystem& out)
{
  const std::size_t m = uNow.size() - 2;
  detail::resize(m, out);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) detail::crankNicolsonRow(i, now, next, uNow, leftNext, rightNext, dx, dt, out);
}

}  // namespace symlie::kernels
