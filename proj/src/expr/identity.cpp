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

#include "symlie/identity.hpp"

#include <cmath>
#include <sstream>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

std::string describe(const std::map<std::string, double>& point)
{
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : point) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

IdentityReport equalNumeric(const Expr& e1, const Expr& e2, const SamplingConfig& cfg, const Assignment& base)
{
  const SampleSet samples = drawSamples(cfg.domain, cfg.samples, cfg.seed);
  std::vector<double> absDiff(samples.size());
  std::vector<double> scaled;
  try {
    scaled = kernels::evaluateSamples(samples.size(), [&](std::size_t i) {
      const Assignment a = samples.assignment(i, base);
      const double v1 = eval(e1, a);
      const double v2 = eval(e2, a);
      absDiff[i] = std::fabs(v1 - v2);
      return absDiff[i] / (1.0 + std::fabs(v1) + std::fabs(v2));
    });
  } catch (const SampleError& err) {
    throw SampleError(std::string(err.what()) + " at sample {" + describe(samples.point(err.index())) + "}",
                      err.index());
  }

  IdentityReport r;
  r.seed = cfg.seed;
  r.nSamples = samples.size();
  r.tolerance = cfg.tolerance;
  if (samples.size() == 0) {
    r.pass = true;
    return r;
  }
  const std::size_t worst = kernels::argMax(scaled);
  r.maxScaledDiscrepancy = scaled[worst];
  r.maxDiscrepancy = absDiff[kernels::argMax(absDiff)];
  r.worstPoint = samples.point(worst);
  r.pass = r.maxScaledDiscrepancy <= cfg.tolerance;
  return r;
}

}  // namespace symlie
