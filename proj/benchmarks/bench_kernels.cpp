// Copyright 2026 The qdqft authors
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

#include <vector>

#include "qdqft/circuit.hpp"
#include "qdqft/noise.hpp"
#include "qdqft/schedule.hpp"
#include "qdqft/state_vector.hpp"

namespace {

using namespace qdqft;

void BM_Hadamard(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    StateVector psi(n);
    psi.apply_hadamard(1);
    for (auto _ : state) {
        psi.apply_hadamard(n / 2 + 1);
        benchmark::DoNotOptimize(psi);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_Hadamard)->Arg(16)->Arg(20)->Arg(24);

void BM_IsingWindow(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    StateVector psi(n);
    psi.apply_hadamard(1);
    for (auto _ : state) {
        psi.apply_ising_evolution(1, n, 3.14159, 0.001);
        benchmark::DoNotOptimize(psi);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << (n - 2)));
}
BENCHMARK(BM_IsingWindow)->Arg(16)->Arg(20)->Arg(24);

void BM_QftSimulate(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Circuit circuit = build_qft_circuit(n);
    std::vector<int> bits(n, 0);
    bits[0] = 1;
    for (auto _ : state) {
        StateVector out = simulate_circuit(circuit, StateVector::basis_state(bits));
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_QftSimulate)->Arg(10)->Arg(14)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_LowerQft(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Circuit circuit = build_qft_circuit(n);
    const DeviceParams params;
    for (auto _ : state) {
        PulseSchedule schedule = lower(circuit, params, 0);
        benchmark::DoNotOptimize(schedule);
    }
}
BENCHMARK(BM_LowerQft)->Arg(8)->Arg(16)->Arg(32);

void BM_MonteCarloGateFidelity(benchmark::State &state) {
    const NoiseModel model{0.0942, 7};
    for (auto _ : state) {
        FidelityReport report =
            monte_carlo_gate_fidelity(model, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_MonteCarloGateFidelity)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
