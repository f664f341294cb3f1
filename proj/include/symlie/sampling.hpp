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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symlie/eval.hpp"

namespace symlie {

inline constexpr std::uint64_t kDefaultSeed = 20260315;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Sampling intervals keyed by symbol name: coordinates ("x", "u_xx") or
/// named constants ("c1").
using Domain = std::map<std::string, Interval>;

/// Points drawn uniformly from a Domain, stored row-major.
class SampleSet {
 public:
  SampleSet(std::vector<std::string> names, std::vector<double> values, std::size_t count);

  std::size_t size() const { return count_; }
  const std::vector<std::string>& names() const { return names_; }
  double at(std::size_t sample, std::size_t column) const { return values_[sample * names_.size() + column]; }

  /// Copy of base with the coordinates of sample i set.
  Assignment assignment(std::size_t i, const Assignment& base) const;
  std::map<std::string, double> point(std::size_t i) const;

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
  std::size_t count_;
};

/// Deterministic in (domain, n, seed) across platforms: uses mt19937_64
/// with an explicit 53-bit mapping to [lo, hi].
SampleSet drawSamples(const Domain& domain, std::size_t n, std::uint64_t seed);

namespace kernels {

using SampleFn = std::function<double(std::size_t)>;

/// Evaluates fn(0..n-1) in parallel (OpenMP). fn must be thread-safe.
/// An exception at any index is rethrown as SampleError carrying the
/// lowest failing index, so the outcome does not depend on scheduling.
std::vector<double> evaluateSamples(std::size_t n, const SampleFn& fn);

/// Serial reference for evaluateSamples; results are bit-identical.
std::vector<double> evaluateSamplesRef(std::size_t n, const SampleFn& fn);

/// Index of the largest value (first one on ties); n must be > 0.
std::size_t argMax(const std::vector<double>& v);

}  // namespace kernels

}  // namespace symlie
