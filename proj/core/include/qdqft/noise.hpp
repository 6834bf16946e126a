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

#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace qdqft {

struct PulseSchedule;

/// Gaussian phase error on interaction windows: delta_phi ~ N(0, sigma^2),
/// sigma in radians. Draws come from a counter-based stream keyed by
/// (seed, stream_index), so they are reproducible and order-independent.
struct NoiseModel {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

struct FidelityReport {
    double sigma = 0.0;
    std::uint64_t trials = 0;
    double mean_fidelity = 0.0;
    double std_error = 0.0;
    std::string metric_name;
};

/// The stream_index-th draw of the model. sigma = 0 returns exactly 0.
double sample_delta_phi(const NoiseModel &model, std::uint64_t stream_index);

/// Process (entanglement) fidelity of a controlled phase carrying an extra
/// e^{-i delta_phi} on |11>: |Tr(U_ideal^dag U_noisy)|^2/16, closed form
/// (10 + 6 cos delta_phi)/16. Even in delta_phi; the target angle drops out.
double gate_process_fidelity(double delta_phi);

/// State fidelity averaged over the four computational basis inputs. Diagonal
/// phase noise leaves basis states invariant, so this reads 1 for any
/// delta_phi; it is kept as the contrast metric to the process fidelity.
double gate_basis_state_fidelity(double delta_phi);

enum class GateFidelityMetric { kProcess, kBasisStateAverage };

FidelityReport monte_carlo_gate_fidelity(const NoiseModel &model, std::uint64_t trials,
                                         GateFidelityMetric metric = GateFidelityMetric::kProcess);

/// Mean state fidelity between the noiseless schedule output and `trials`
/// independently-noised executions. Window k of trial t draws stream index
/// t * window_count + k.
FidelityReport monte_carlo_qft_fidelity(const PulseSchedule &schedule,
                                        std::span<const int> input_bits, const NoiseModel &model,
                                        std::uint64_t trials);

/// Fixed-order pairwise tree sum divided by the count; the reduction order
/// never depends on how values were produced.
double pairwise_mean(std::span<const double> values);

}  // namespace qdqft
