/*
 * Copyright 2026 The cmdp Authors
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
 */

#include <benchmark/benchmark.h>

#include <random>

#include "cmdp/constructions.hpp"
#include "cmdp/matrix.hpp"
#include "cmdp/mdp_verify.hpp"
#include "cmdp/selection.hpp"

namespace {

using namespace cmdp;

FieldPtr field_for(int which) {
    switch (which) {
        case 0: return std::make_shared<const Field>(make_prime_field(13));
        case 1: return std::make_shared<const Field>(make_prime_field((Integer(1) << 61) - 1));
        case 2: return std::make_shared<const Field>(make_prime_field((Integer(1) << 127) - 1));
        default: return std::make_shared<const Field>(make_extension_field(2, 129));
    }
}

Matrix random_square(const Field& f, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m = Matrix::zeros(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = f.random(rng);
    return m;
}

// Args: field kind (0 F_13, 1 F_(2^61-1), 2 F_(2^127-1), 3 F_(2^129)), size.
void BM_Determinant(benchmark::State& state) {
    const auto f = field_for(static_cast<int>(state.range(0)));
    const Matrix m = random_square(*f, static_cast<std::size_t>(state.range(1)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(*f, m));
}
BENCHMARK(BM_Determinant)->ArgsProduct({{0, 1, 2, 3}, {2, 8, 14}});

void BM_Unrank(benchmark::State& state) {
    const SelectionSpace space(SelectionMode::complete, 3, 1, 2, 6);
    std::mt19937_64 rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(space.unrank(uniform_below(space.size(), rng)));
}
BENCHMARK(BM_Unrank);

void BM_Enumerate(benchmark::State& state) {
    const SelectionSpace space(SelectionMode::complete, 2, 1, 2, 4);
    for (auto _ : state) {
        ColumnSelection s = space.first();
        std::size_t count = 1;
        while (space.next(s)) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate);

void BM_CompleteMdpExampleA(benchmark::State& state) {
    const auto h = pascal_construction(3, 2, 1, field_for(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_complete_mdp(h).verdict);
}
BENCHMARK(BM_CompleteMdpExampleA);

// Sampled verification of the (3,1,4) code, threads as the argument.
void BM_SampledExampleB(benchmark::State& state) {
    const auto h = pascal_construction(3, 1, 4, field_for(1));
    VerifyOptions o;
    o.sampled = true;
    o.sample_count = 2000;
    o.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_complete_mdp(h, o).verdict);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * o.sample_count));
}
BENCHMARK(BM_SampledExampleB)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
