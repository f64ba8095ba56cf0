// Copyright 2026 The autopt Authors
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

// Serial reference against OpenMP kernel, pairwise.

#include <benchmark/benchmark.h>

#include "autopt/optimizer.hpp"

using namespace autopt;

namespace {

const char* kCodes[] = {"4_2_2", "5_1_3", "6_1_3", "7_1_3"};

void BM_AutGroupSerial(benchmark::State& state) {
    const StabCode code = builtin(kCodes[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_serial(code).order);
    state.SetLabel(kCodes[state.range(0)]);
}
void BM_AutGroupParallel(benchmark::State& state) {
    const StabCode code = builtin(kCodes[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(code).order);
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_AutGroupSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutGroupParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OrbitSerial(benchmark::State& state) {
    const StabCode code = builtin(kCodes[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(code_orbit_serial(code).entries.size());
    state.SetLabel(kCodes[state.range(0)]);
}
void BM_OrbitParallel(benchmark::State& state) {
    const StabCode code = builtin(kCodes[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(code_orbit(code).entries.size());
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_OrbitSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();

MonomialOp sample_op() {
    return MonomialOp::from_one_based({2, 3, 1, 5, 4}, {LocalClifford::H, LocalClifford::S, LocalClifford::I,
                                                         LocalClifford::SH, LocalClifford::HSH});
}

void BM_BruteConjugateSerial(benchmark::State& state) {
    const MonomialOp pi = sample_op();
    for (auto _ : state) benchmark::DoNotOptimize(brute_conjugate_serial(pi).cliffords);
}
void BM_BruteConjugateParallel(benchmark::State& state) {
    const MonomialOp pi = sample_op();
    for (auto _ : state) benchmark::DoNotOptimize(brute_conjugate(pi).cliffords);
}
BENCHMARK(BM_BruteConjugateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteConjugateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BruteAutomorphismsSerial(benchmark::State& state) {
    const StabCode code = builtin("5_1_3");
    for (auto _ : state) benchmark::DoNotOptimize(brute_automorphisms_serial(code).size());
}
void BM_BruteAutomorphismsParallel(benchmark::State& state) {
    const StabCode code = builtin("5_1_3");
    for (auto _ : state) benchmark::DoNotOptimize(brute_automorphisms(code).size());
}
BENCHMARK(BM_BruteAutomorphismsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteAutomorphismsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OracleSerial(benchmark::State& state) {
    const StabCode code = builtin("4_2_2");
    const std::vector<Metric> metrics = {Metric::from_number(1), Metric::from_number(2)};
    for (auto _ : state) benchmark::DoNotOptimize(brute_oracle_table_serial(code, metrics).size());
}
void BM_OracleParallel(benchmark::State& state) {
    const StabCode code = builtin("4_2_2");
    const std::vector<Metric> metrics = {Metric::from_number(1), Metric::from_number(2)};
    for (auto _ : state) benchmark::DoNotOptimize(brute_oracle_table(code, metrics).size());
}
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
