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
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symlie/errors.hpp"
#include "symlie/sampling.hpp"

namespace symlie::kernels {

std::vector<double> evaluateSamples(std::size_t n, const SampleFn& fn)
{
  std::vector<double> out(n, 0.0);
  std::size_t failed = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx);
    } catch (...) {
#pragma omp critical(symlie_sample_error)
      {
        if (idx < failed) {
          failed = idx;
          error = std::current_exception();
        }
      }
    }
  }

  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const SampleError&) {
      throw;
    } catch (const std::exception& e) {
      throw SampleError(e.what(), failed);
    }
  }
  return out;
}

}  // namespace symlie::kernels
