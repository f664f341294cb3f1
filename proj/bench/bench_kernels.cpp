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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "symlie/eval.hpp"
#include "symlie/models.hpp"
#include "symlie/numerics.hpp"
#include "symlie/sampling.hpp"

namespace {

using namespace symlie;

Grid benchGrid(benchmark::State& state)
{
  Grid g;
  g.nx = static_cast<std::size_t>(state.range(0));
  return g;
}

template <auto Fn>
void sampleCoefficientsBench(benchmark::State& state)
{
  const EvolutionPDE pde = backwardKolmogorov();
  const Grid g = benchGrid(state);
  kernels::CoefficientSlice out;
  for (auto _ : state) {
    Fn(pde, g, 0.5, out);
    benchmark::DoNotOptimize(out.a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.nx + 2));
}

template <auto Fn>
void assembleBench(benchmark::State& state)
{
  const EvolutionPDE pde = fokkerPlanck();
  const Grid g = benchGrid(state);
  kernels::CoefficientSlice now, next;
  kernels::sampleCoefficientsRef(pde, g, 0.0, now);
  kernels::sampleCoefficientsRef(pde, g, g.dt(), next);
  const std::vector<double> u(g.nx + 2, 1.0);
  kernels::TridiagonalSystem sys;
  for (auto _ : state) {
    Fn(now, next, u, 1.0, 1.0, g.dx(), g.dt(), sys);
    benchmark::DoNotOptimize(sys.rhs.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.nx));
}

template <auto Fn>
void evaluateBench(benchmark::State& state)
{
  const Expr rhs = fokkerPlanck().rhs();
  const auto n = static_cast<std::size_t>(state.range(0));
  const kernels::SampleFn fn = [&](std::size_t i) {
    Assignment a;
    const double s = static_cast<double>(i) / static_cast<double>(n);
    a.set(JetCoord::x, 0.5 + s).set(JetCoord::t, s).set(JetCoord::u, 1 - s / 2);
    a.set(JetCoord::u_x, s - 0.5).set(JetCoord::u_xx, 0.25 * s);
    return eval(rhs, a);
  };
  for (auto _ : state) benchmark::DoNotOptimize(Fn(n, fn));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

}  // namespace

BENCHMARK(sampleCoefficientsBench<symlie::kernels::sampleCoefficients>)->Name("sample_coefficients")->Arg(399)->Arg(3199);
BENCHMARK(sampleCoefficientsBench<symlie::kernels::sampleCoefficientsRef>)->Name("sample_coefficients_ref")->Arg(399)->Arg(3199);
BENCHMARK(assembleBench<symlie::kernels::assembleCrankNicolson>)->Name("assemble_cn")->Arg(399)->Arg(100000);
BENCHMARK(assembleBench<symlie::kernels::assembleCrankNicolsonRef>)->Name("assemble_cn_ref")->Arg(399)->Arg(100000);
BENCHMARK(evaluateBench<symlie::kernels::evaluateSamples>)->Name("evaluate_samples")->Arg(1000)->Arg(10000);
BENCHMARK(evaluateBench<symlie::kernels::evaluateSamplesRef>)->Name("evaluate_samples_ref")->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
