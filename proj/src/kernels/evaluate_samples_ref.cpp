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
#include <vector>

#include "symlie/errors.hpp"
#include "symlie/sampling.hpp"

namespace symlie::kernels {

std::vector<double> evaluateSamplesRef(std::size_t n, const SampleFn& fn)
{
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(i);
    } catch (const SampleError&) {
      throw;
    } catch (const std::exception& e) {
      throw SampleError(e.what(), i);
    }
  }
  return out;
}

}  // namespace symlie::kernels
