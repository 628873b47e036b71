// Copyright 2026 The qubobs-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Parallel kernels against their serial references.

#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "qubobs/protocols.hpp"
#include "qubobs/verifier.hpp"

namespace {

using namespace qubobs;

void BM_BB84Parallel(benchmark::State &state) {
    const BB84Params p{static_cast<int>(state.range(0)), true, 7, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb84_run(p));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BB84Serial(benchmark::State &state) {
    const BB84Params p{static_cast<int>(state.range(0)), true, 7, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb84_run_serial(p));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Random three-qubit scripts: prepare, then gates with a measurement at the end.
std::vector<std::vector<Step>> make_scripts(std::size_t count) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<Step>> scripts(count);
    for (auto &s : scripts) {
        for (int q = 0; q < 3; ++q) {
            const double p = u(gen);
            s.emplace_back(step::PrepareQubit{std::sqrt(p), -std::sqrt(1 - p)});
        }
        for (int k = 0; k < 6; ++k) {
            const std::size_t t = gen() % 3;
            switch (gen() % 4) {
            case 0: s.emplace_back(step::ApplyGate{Gate::H(), t}); break;
            case 1: s.emplace_back(step::ApplyGate{Gate::X(), t}); break;
            case 2: s.emplace_back(step::ApplyGate{Gate::Z(), t}); break;
            default: s.emplace_back(step::ApplyControlled{Gate::X(), (t + 1) % 3, t});
            }
        }
        s.emplace_back(step::Cancel{});
        s.emplace_back(step::Measure{{0, 1}, u(gen)});
    }
    return scripts;
}

void BM_AuditParallel(benchmark::State &state) {
    const auto scripts = make_scripts(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit_batch(scripts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AuditSerial(benchmark::State &state) {
    const auto scripts = make_scripts(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit_batch_serial(scripts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_BB84Parallel)->Arg(1000)->Arg(40000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BB84Serial)->Arg(1000)->Arg(40000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
