// Copyright 2026 The realqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "realqt/random.hpp"

using namespace realqt;

namespace {

void BM_GammaEmbed(benchmark::State& state) {
  Prng rng(1);
  const ComplexMatrix h = random_hermitian(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(h));
  }
}
BENCHMARK(BM_GammaEmbed)->Arg(8)->Arg(32)->Arg(64);

void BM_DotCombine(benchmark::State& state) {
  Prng rng(2);
  const auto s = SpecialSymmetric::from_assembled(
      gamma(random_hermitian(state.range(0), rng)));
  const auto t = SpecialSymmetric::from_assembled(
      gamma(random_hermitian(state.range(0), rng)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dot(s, t));
  }
}
BENCHMARK(BM_DotCombine)->Arg(4)->Arg(8);

void BM_Wedge(benchmark::State& state) {
  Prng rng(3);
  const RealMatrix s = gamma(random_hermitian(state.range(0), rng));
  const RealMatrix t = gamma(random_hermitian(state.range(0), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(s, t));
  }
}
BENCHMARK(BM_Wedge)->Arg(4)->Arg(8);

void BM_EigSym(benchmark::State& state) {
  Prng rng(4);
  const RealMatrix m = gamma(random_hermitian(state.range(0), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(m));
  }
}
BENCHMARK(BM_EigSym)->Arg(8)->Arg(32);

void BM_MapLiftedTensor(benchmark::State& state) {
  Prng rng(5);
  const SystemDims dims({2, 2});
  const ComplexMatrix rho = random_density(4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        map_m_lifted(rho, dims, CombinationRule::Tensor));
  }
}
BENCHMARK(BM_MapLiftedTensor);

void BM_GMap(benchmark::State& state) {
  Prng rng(6);
  const SystemDims dims({2, 2});
  const MappedVector v =
      map_m_lifted(random_density(4, rng), dims, CombinationRule::Tensor);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_map(v));
  }
}
BENCHMARK(BM_GMap);

void BM_WitnessBell(benchmark::State& state) {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const MappedVector v = map_m_lifted(bell, SystemDims({2, 2}),
                                      CombinationRule::Tensor);
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness(v));
  }
}
BENCHMARK(BM_WitnessBell);

}  // namespace

BENCHMARK_MAIN();
