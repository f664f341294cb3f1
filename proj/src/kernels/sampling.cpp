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

#include "symlie/sampling.hpp"

#include <random>
#include <stdexcept>

namespace symlie {

SampleSet::SampleSet(std::vector<std::string> names, std::vector<double> values, std::size_t count)
    : names_(std::move(names)), values_(std::move(values)), count_(count)
{
  if (values_.size() != count_ * names_.size()) throw std::invalid_argument("sample values do not fill whole rows");
}

Assignment SampleSet::assignment(std::size_t i, const Assignment& base) const
{
  Assignment a = base;
  for (std::size_t c = 0; c < names_.size(); ++c) a.setByName(names_[c], at(i, c));
  return a;
}

std::map<std::string, double> SampleSet::point(std::size_t i) const
{
  std::map<std::string, double> p;
  for (std::size_t c = 0; c < names_.size(); ++c) p[names_[c]] = at(i, c);
  return p;
}

SampleSet drawSamples(const Domain& domain, std::size_t n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (const auto& [name, iv] : domain) {
    if (!(iv.lo <= iv.hi)) throw std::invalid_argument("sampling interval for '" + name + "' is empty");
    names.push_back(name);
  }
  std::vector<double> values;
  values.reserve(n * names.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [name, iv] : domain) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      values.push_back(iv.lo + unit * (iv.hi - iv.lo));
    }
  }
  return SampleSet(std::move(names), std::move(values), n);
}

namespace kernels {

std::size_t argMax(const std::vector<double>& v)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

}  // namespace kernels

}  // namespace symlie
