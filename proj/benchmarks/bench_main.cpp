// Copyright 2026 The gpgsim Authors
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

#include <benchmark/benchmark.h>

#include "gpgsim/gpgsim.hpp"

using namespace gpgsim;

static void BM_rotation_matrix(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_matrix(n, 0.3, 0.7));
    }
}
BENCHMARK(BM_rotation_matrix)->Arg(10)->Arg(70)->Arg(260);

static void BM_phasing_schedule(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(schedule_product(phasing_schedule(n, n / 2)));
    }
}
BENCHMARK(BM_phasing_schedule)->Arg(10)->Arg(70)->Arg(260);

static void BM_prepare_dicke(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare_dicke(n, 0.0).fidelity);
    }
}
BENCHMARK(BM_prepare_dicke)->Arg(10)->Arg(70)->Arg(260)->Unit(benchmark::kMillisecond);

static void BM_noisy_gpg_channel(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    GpgParams g = phasing_schedule(n, n / 2).gates[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(noisy_gpg_channel(n, g, {0.05}));
    }
}
BENCHMARK(BM_noisy_gpg_channel)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_noisy_phasing_fidelity(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(noisy_phasing_channel(n, n / 2, {0.05}).report.process_fidelity);
    }
}
BENCHMARK(BM_noisy_phasing_fidelity)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_filter_function(benchmark::State &state) {
    auto seq = echo_sequence(build_timeline(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter_function(seq, 0.01));
    }
}
BENCHMARK(BM_filter_function)->Arg(10)->Arg(100)->Arg(1000);

static void BM_dephasing_integral(benchmark::State &state) {
    auto timeline = build_timeline(static_cast<int>(state.range(0)));
    auto s = NoiseSpectrum::ohmic(1.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dephasing_integral(timeline, s).ratio);
    }
}
BENCHMARK(BM_dephasing_integral)->Arg(20)->Arg(70)->Unit(benchmark::kMillisecond);

static void BM_prepare_phi2(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare_phi2(10));
    }
}
BENCHMARK(BM_prepare_phi2)->Unit(benchmark::kMillisecond);

static void BM_nelder_mead_state_map(benchmark::State &state) {
    SynthesisConfig cfg;
    cfg.restarts = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_state_map(4, DickeKet::basis(4, 0.0), cfg).infidelity);
    }
}
BENCHMARK(BM_nelder_mead_state_map)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
