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
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qdqft/circuit.hpp"
#include "qdqft/device.hpp"
#include "qdqft/noise.hpp"
#include "qdqft/state_vector.hpp"

namespace qdqft {

enum class PulseKind { kHadamard, kPhase };

struct SingleQubitPulse {
    int molecule;
    PulseKind kind;
    double phi = 0.0;  // rad, used by kPhase only
};

/// A timed Coulomb interaction window between molecules gamma < iota. The
/// window realizes a CZ when energy * duration / hbar = (2 mu + 1) pi.
struct IsingWindow {
    int gamma;
    int iota;
    double energy;         // J
    int mu;
    double duration;       // s
    double nominal_phase;  // (2 mu + 1) pi, rad
    double start;          // s; cumulative interaction time at window start
};

using PulseStep = std::variant<SingleQubitPulse, IsingWindow>;

struct PulseSchedule {
    int num_molecules = 0;
    DeviceParams params;
    int mu = 0;  // global pulse order (per-distance overrides may differ)
    std::vector<PulseStep> steps;
    double total_interaction_time = 0.0;  // s; single-qubit pulses count as 0
};

struct LoweringOptions {
    int mu = 0;
    /// Per-separation pulse-order overrides, keyed by iota - gamma.
    std::map<int, int> mu_by_distance;
    /// Energy-ratio threshold for the oversized-chain warning.
    double warning_threshold = 1e-3;
};

/// Compiles a QFT circuit (Hadamard / controlled-phase pattern only) into a
/// strictly serialized pulse program. Each controlled phase becomes the
/// nine-step physical sequence with both CZs realized as Ising windows at
/// the circuit pair's separation. Deterministic: equal inputs give
/// bit-identical schedules. A chain longer than the energy-ratio guard emits
/// a warning (non-fatal) into `warnings` when provided.
PulseSchedule lower(const Circuit &circuit, const DeviceParams &params,
                    const LoweringOptions &options = {},
                    std::vector<std::string> *warnings = nullptr);

PulseSchedule lower(const Circuit &circuit, const DeviceParams &params, int mu,
                    std::vector<std::string> *warnings = nullptr);

std::uint64_t count_ising_windows(const PulseSchedule &schedule);

/// Executes the schedule on |input_bits>. Window k applies its nominal phase
/// plus a delta drawn at stream index stream_base + k (0 without a model).
/// Readout reversal is not applied.
StateVector simulate_schedule(const PulseSchedule &schedule, std::span<const int> input_bits,
                              const NoiseModel *noise = nullptr,
                              std::uint64_t stream_base = 0);

/// Same execution with one caller-supplied delta per Ising window.
StateVector simulate_schedule_with_deltas(const PulseSchedule &schedule,
                                          std::span<const int> input_bits,
                                          std::span<const double> deltas);

struct DistanceBucket {
    int separation;
    std::uint64_t window_count;
    double total_duration;  // s
};

struct TimingReport {
    double total_interaction_time;  // s
    double coherence_time;          // s
    double ratio;
    std::vector<DistanceBucket> per_distance;  // ascending separation
};

TimingReport timing_report(const PulseSchedule &schedule);

struct ScheduleViolation {
    std::size_t step_index;
    std::string message;
};

/// Structural checks: step invariants, duration-energy consistency, strict
/// serialization of windows, and the total-time sum. Empty result = valid.
std::vector<ScheduleViolation> validate_schedule(const PulseSchedule &schedule);

}  // namespace qdqft
