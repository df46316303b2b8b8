/*
   Copyright 2026 The ternopt Authors

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

// Serial reference vs OpenMP kernels. The Exec argument is the second
// benchmark arg: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "ternopt/checker.hpp"
#include "ternopt/codes.hpp"
#include "ternopt/gfext.hpp"

using namespace ternopt;

namespace {

Exec exec_arg(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void BM_CountByScan(benchmark::State& state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    const FieldContext& ctx = default_context(m);
    const Exec exec = exec_arg(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_by_scan(ctx, 124, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.order_u64() + 1));
}

void BM_CountByZech(benchmark::State& state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    const ZechTable zt(default_context(m));
    const Exec exec = exec_arg(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_by_zech(zt, 124, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(zt.order()));
}

void BM_MinWeight3(benchmark::State& state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    const CyclicCode code = build_C1e(default_context(m), 2);
    const Exec exec = exec_arg(state);
    for (auto _ : state) benchmark::DoNotOptimize(min_weight_at_most_3(code, kDefaultOracleCap, exec));
}

}  // namespace

BENCHMARK(BM_CountByScan)->ArgsProduct({{9, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountByZech)->ArgsProduct({{9, 11, 13}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight3)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
