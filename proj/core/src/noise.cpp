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

#include "qdqft/noise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qdqft/schedule.hpp"
#include "qdqft/state_vector.hpp"

namespace qdqft {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; out_k = mix(seed + (k+1)*golden) reproduces the k-th
// draw of a splitmix64 generator seeded with `seed`.
std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 4) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

struct MeanStdError {
    double mean;
    double std_error;
};

MeanStdError mean_and_std_error(std::span<const double> values) {
    const double mean = pairwise_mean(values);
    if (values.size() < 2) return {mean, 0.0};
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double n = static_cast<double>(values.size());
    const double variance = pairwise_sum(sq) / (n - 1.0);
    return {mean, std::sqrt(variance / n)};
}

}  // namespace

double pairwise_mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean of empty sample");
    return pairwise_sum(values) / static_cast<double>(values.size());
}

double sample_delta_phi(const NoiseModel &model, std::uint64_t stream_index) {
    if (!(model.sigma >= 0.0)) throw std::invalid_argument("sigma must be non-negative");
    if (model.sigma == 0.0) return 0.0;
    // Two stream draws per sample, consumed by Box-Muller.
    const std::uint64_t base = model.seed + 2 * stream_index * kGolden;
    const double u1 = 1.0 - unit_interval(mix64(base + kGolden));  // (0, 1]
    const double u2 = unit_interval(mix64(base + 2 * kGolden));
    return model.sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double gate_process_fidelity(double delta_phi) {
    if (!std::isfinite(delta_phi)) throw std::invalid_argument("delta_phi must be finite");
    return (10.0 + 6.0 * std::cos(delta_phi)) / 16.0;
}

double gate_basis_state_fidelity(double delta_phi) {
    if (!std::isfinite(delta_phi)) throw std::invalid_argument("delta_phi must be finite");
    const std::complex<double> noisy_diag[4] = {
        {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, std::polar(1.0, -delta_phi)};
    double acc = 0.0;
    for (const auto &entry : noisy_diag) acc += std::norm(entry);
    return acc / 4.0;
}

FidelityReport monte_carlo_gate_fidelity(const NoiseModel &model, std::uint64_t trials,
                                         GateFidelityMetric metric) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    std::vector<double> fidelities(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double delta = sample_delta_phi(model, i);
        fidelities[i] = metric == GateFidelityMetric::kProcess
                            ? gate_process_fidelity(delta)
                            : gate_basis_state_fidelity(delta);
    }
    const auto stats = mean_and_std_error(fidelities);
    return FidelityReport{
        model.sigma, trials, stats.mean, stats.std_error,
        metric == GateFidelityMetric::kProcess ? "process_fidelity" : "basis_state_fidelity"};
}

FidelityReport monte_carlo_qft_fidelity(const PulseSchedule &schedule,
                                        std::span<const int> input_bits, const NoiseModel &model,
                                        std::uint64_t trials) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const StateVector noiseless = simulate_schedule(schedule, input_bits);
    const std::uint64_t windows = count_ising_windows(schedule);
    std::vector<double> fidelities(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StateVector noisy =
            simulate_schedule(schedule, input_bits, &model, t * windows);
        fidelities[t] = state_fidelity(noiseless, noisy);
    }
    const auto stats = mean_and_std_error(fidelities);
    return FidelityReport{model.sigma, trials, stats.mean, stats.std_error,
                          "state_fidelity_vs_noiseless"};
}

}  // namespace qdqft
