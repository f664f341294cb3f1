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

#include <cstdint>
#include <map>
#include <string>

#include "symlie/expr.hpp"
#include "symlie/sampling.hpp"

namespace symlie {

struct SamplingConfig {
  Domain domain;
  std::size_t samples = 200;
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
};

struct IdentityReport {
  bool pass = false;
  /// Largest |e1 - e2| over the samples.
  double maxDiscrepancy = 0.0;
  /// Largest |e1 - e2| / (1 + |e1| + |e2|); the pass criterion compares this to tolerance.
  double maxScaledDiscrepancy = 0.0;
  std::map<std::string, double> worstPoint;
  std::uint64_t seed = 0;
  std::size_t nSamples = 0;
  double tolerance = 0.0;
};

/// Randomized identity test: e1 == e2 iff |e1-e2| <= tol*(1+|e1|+|e2|) at
/// every sample. Evaluation errors are rethrown as SampleError naming the
/// offending point.
IdentityReport equalNumeric(const Expr& e1, const Expr& e2, const SamplingConfig& cfg, const Assignment& base = {});

}  // namespace symlie
