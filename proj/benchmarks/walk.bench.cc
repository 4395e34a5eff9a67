// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"
#include "qwalk/closed_form.h"
#include "qwalk/errors.h"
#include "qwalk/observables.h"
#include "qwalk/sweep.h"

namespace qwalk {
namespace {

void BM_evolve(benchmark::State &state) {
    const int64_t steps = state.range(0);
    const InitialStateParams p{0.3, 1.1, 0.2};
    const CoinParams c{0.5, kPi / 4, 0.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(p, c, steps));
    }
    state.SetComplexityN(steps);
}
BENCHMARK(BM_evolve)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_mean_position(benchmark::State &state) {
    const Distribution d = distribution(evolve({0.3, 1.1, 0.2}, {0.5, kPi / 4, 0.9}, state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mean_position(d));
    }
}
BENCHMARK(BM_mean_position)->Arg(100)->Arg(1000);

void BM_compute_baseline(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_baseline(kPi / 4, 100));
    }
}
BENCHMARK(BM_compute_baseline);

void BM_phase_sweep_361(benchmark::State &state) {
    const SweepSpec spec = figures::figure2_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_phase_sweep(spec));
    }
}
BENCHMARK(BM_phase_sweep_361)->Unit(benchmark::kMillisecond);

void BM_predict_mean(benchmark::State &state) {
    const Baseline b = compute_baseline(kPi / 4, 100);
    InitialStateParams p{0.3, 1.1, 0.2};
    const CoinParams c{0.5, kPi / 4, 0.9};
    for (auto _ : state) {
        p.phi += 1e-3;
        benchmark::DoNotOptimize(predict_mean(p, c, b));
    }
}
BENCHMARK(BM_predict_mean);

}  // namespace
}  // namespace qwalk

BENCHMARK_MAIN();
