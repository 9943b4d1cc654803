/*
   Copyright 2026 The infmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "infmod/corpus.hpp"
#include "infmod/hom.hpp"
#include "infmod/infinity.hpp"
#include "infmod/ratmat.hpp"
#include "infmod/umodule.hpp"

namespace {

using namespace infmod;

Field field_of(const benchmark::State& state) { return state.range(1) == 0 ? Field::rationals() : Field::prime(101); }

PolyMatrix sample(const benchmark::State& state) {
    corpus::Rng rng(17);
    return corpus::random_nonsingular(rng, field_of(state), static_cast<std::size_t>(state.range(0)), 2);
}

void BM_SmithAtInfinity(benchmark::State& state) {
    const RatMatrix w = shift_by(to_rational(sample(state)), -1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_at_infinity(w));
}

void BM_ProfileAtInfinity(benchmark::State& state) {
    const RatMatrix w = shift_by(to_rational(sample(state)), -1);
    for (auto _ : state) benchmark::DoNotOptimize(profile_at_infinity(w));
}

void BM_RationalInverse(benchmark::State& state) {
    const RatMatrix w = to_rational(sample(state));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(w));
}

void BM_ComputeBasis(benchmark::State& state) {
    const UModule u(sample(state));
    for (auto _ : state) benchmark::DoNotOptimize(compute_basis(u));
}

void BM_IsSurjective(benchmark::State& state) {
    corpus::Rng rng(23);
    const auto s = corpus::random_general_intertwiner(rng, field_of(state), static_cast<std::size_t>(state.range(0)));
    const Intertwiner iw(UModule(s.l), UModule(s.l1), s.theta, s.theta1);
    for (auto _ : state) benchmark::DoNotOptimize(is_surjective(iw));
}

// Arguments: matrix size, field (0 = Q, 1 = GF(101)).
void sizes(benchmark::internal::Benchmark* b) {
    for (int field : {0, 1})
        for (int n : {2, 3, 4}) b->Args({n, field});
    b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_SmithAtInfinity)->Apply(sizes);
BENCHMARK(BM_ProfileAtInfinity)->Apply(sizes);
BENCHMARK(BM_RationalInverse)->Apply(sizes);
BENCHMARK(BM_ComputeBasis)->Apply(sizes);
BENCHMARK(BM_IsSurjective)->Apply(sizes);

BENCHMARK_MAIN();
