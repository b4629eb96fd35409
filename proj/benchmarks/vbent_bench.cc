// Copyright 2026 The vbent Authors.
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

#include <random>

#include "vbent/boolfun.h"
#include "vbent/families.h"
#include "vbent/propp.h"
#include "vbent/vectorial.h"

namespace vbent {
namespace {

BooleanFunction RandomFunction(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return BooleanFunction::Tabulate(n, [&](std::uint32_t) { return (rng() & 1u) != 0; });
}

void BM_Walsh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec field = FieldSpec::Standard(n);
  const BooleanFunction f = RandomFunction(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Walsh(f, field));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Walsh)->DenseRange(8, 20, 2);

void BM_AlgebraicDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BooleanFunction f = RandomFunction(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(AlgebraicDegree(f));
}
BENCHMARK(BM_AlgebraicDegree)->DenseRange(8, 20, 4);

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec field = FieldSpec::Standard(static_cast<int>(state.range(0)));
  Elem acc = 3;
  for (auto _ : state) {
    for (Elem x = 1; x < 1024; ++x) acc = field.mul(acc ^ x, x) | 1u;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1023);
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(24);

void BM_VectorialBent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec field = FieldSpec::Standard(n);
  const VectorialFunction g = KasamiBase(field);
  for (auto _ : state) benchmark::DoNotOptimize(IsVectorialBent(g, field));
}
BENCHMARK(BM_VectorialBent)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_BuildFamily(benchmark::State& state) {
  FamilyRequest req;
  req.family = static_cast<Family>(state.range(0));
  req.n = static_cast<int>(state.range(1));
  req.r = 2;
  req.polys = {ReducedPolynomial::Parse("X1*X2+X3")};
  for (auto _ : state) benchmark::DoNotOptimize(BuildFamily(req));
}
BENCHMARK(BM_BuildFamily)
    ->Args({static_cast<int>(Family::kKasami), 12})
    ->Args({static_cast<int>(Family::kNiho), 10})
    ->Args({static_cast<int>(Family::kGold), 12})
    ->Unit(benchmark::kMillisecond);

void BM_FindDefiningSets(benchmark::State& state) {
  const FieldSpec field = FieldSpec::Standard(static_cast<int>(state.range(0)));
  const BooleanFunction g = KasamiDual(field, 1);
  SearchOptions options;
  options.limit = 1;
  for (auto _ : state) benchmark::DoNotOptimize(FindDefiningSets(g, 2, options));
}
BENCHMARK(BM_FindDefiningSets)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vbent

BENCHMARK_MAIN();
