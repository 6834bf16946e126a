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

#include "qdqft/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdqft {

namespace {

int pulse_order_for(const LoweringOptions &options, int separation) {
    const auto it = options.mu_by_distance.find(separation);
    return it == options.mu_by_distance.end() ? options.mu : it->second;
}

IsingWindow make_window(const DeviceParams &params, int gamma, int iota, int mu, double start) {
    const int separation = iota - gamma;
    const double energy = coulomb_energy(params, separation);
    return IsingWindow{
        gamma,
        iota,
        energy,
        mu,
        cz_duration(params, separation, mu),
        (2.0 * mu + 1.0) * std::numbers::pi,
        start,
    };
}

bool relatively_close(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

PulseSchedule lower(const Circuit &circuit, const DeviceParams &params,
                    const LoweringOptions &options, std::vector<std::string> *warnings) {
    validate(params);
    if (options.mu < 0) throw std::invalid_argument("pulse order mu must be non-negative");
    PulseSchedule schedule;
    schedule.num_molecules = circuit.num_qubits;
    schedule.params = params;
    schedule.mu = options.mu;

    double clock = 0.0;
    for (const Gate &gate : circuit.gates) {
        if (const auto *h = std::get_if<HadamardGate>(&gate)) {
            schedule.steps.push_back(SingleQubitPulse{h->q, PulseKind::kHadamard, 0.0});
            continue;
        }
        const auto *cp = std::get_if<ControlledPhaseGate>(&gate);
        if (cp == nullptr) {
            throw std::invalid_argument(
                "unsupported program: lowering expects the Hadamard/controlled-phase "
                "pattern of the QFT circuit");
        }
        const int gamma = std::min(cp->control, cp->target);
        const int iota = std::max(cp->control, cp->target);
        if (gamma == iota || gamma < 1 || iota > circuit.num_qubits) {
            throw std::invalid_argument("controlled phase has invalid molecule indices");
        }
        const int mu = pulse_order_for(options, iota - gamma);
        for (const Gate &g : decompose_controlled_phase(*cp)) {
            if (const auto *hh = std::get_if<HadamardGate>(&g)) {
                schedule.steps.push_back(SingleQubitPulse{hh->q, PulseKind::kHadamard, 0.0});
            } else if (const auto *ph = std::get_if<PhaseGate>(&g)) {
                schedule.steps.push_back(SingleQubitPulse{ph->q, PulseKind::kPhase, ph->phi});
            } else {
                IsingWindow window = make_window(params, gamma, iota, mu, clock);
                clock += window.duration;
                schedule.steps.push_back(window);
            }
        }
    }
    schedule.total_interaction_time = clock;

    if (warnings != nullptr && circuit.num_qubits >= 2) {
        const int guard = max_qubits(params, options.warning_threshold);
        if (circuit.num_qubits > guard) {
            warnings->push_back("chain of " + std::to_string(circuit.num_qubits) +
                                " molecules exceeds the energy-ratio guard of " +
                                std::to_string(guard) + " (threshold " +
                                std::to_string(options.warning_threshold) + ")");
        }
    }
    return schedule;
}

PulseSchedule lower(const Circuit &circuit, const DeviceParams &params, int mu,
                    std::vector<std::string> *warnings) {
    LoweringOptions options;
    options.mu = mu;
    return lower(circuit, params, options, warnings);
}

std::uint64_t count_ising_windows(const PulseSchedule &schedule) {
    std::uint64_t count = 0;
    for (const PulseStep &step : schedule.steps) {
        if (std::holds_alternative<IsingWindow>(step)) ++count;
    }
    return count;
}

StateVector simulate_schedule_with_deltas(const PulseSchedule &schedule,
                                          std::span<const int> input_bits,
                                          std::span<const double> deltas) {
    if (static_cast<int>(input_bits.size()) != schedule.num_molecules) {
        throw std::invalid_argument("input bit count must match the molecule count");
    }
    StateVector state = StateVector::basis_state(input_bits);
    std::size_t window_index = 0;
    for (const PulseStep &step : schedule.steps) {
        if (const auto *pulse = std::get_if<SingleQubitPulse>(&step)) {
            if (pulse->kind == PulseKind::kHadamard) {
                state.apply_hadamard(pulse->molecule);
            } else {
                state.apply_phase(pulse->molecule, pulse->phi);
            }
        } else {
            const auto &window = std::get<IsingWindow>(step);
            if (window_index >= deltas.size()) {
                throw std::invalid_argument("fewer deltas than Ising windows");
            }
            state.apply_ising_evolution(window.gamma, window.iota, window.nominal_phase,
                                        deltas[window_index]);
            ++window_index;
        }
    }
    return state;
}

StateVector simulate_schedule(const PulseSchedule &schedule, std::span<const int> input_bits,
                              const NoiseModel *noise, std::uint64_t stream_base) {
    std::vector<double> deltas(count_ising_windows(schedule), 0.0);
    if (noise != nullptr) {
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            deltas[k] = sample_delta_phi(*noise, stream_base + k);
        }
    }
    return simulate_schedule_with_deltas(schedule, input_bits, deltas);
}

TimingReport timing_report(const PulseSchedule &schedule) {
    TimingReport report;
    report.total_interaction_time = schedule.total_interaction_time;
    report.coherence_time = schedule.params.coherence_time;
    report.ratio = schedule.total_interaction_time / schedule.params.coherence_time;
    std::map<int, DistanceBucket> buckets;
    for (const PulseStep &step : schedule.steps) {
        if (const auto *window = std::get_if<IsingWindow>(&step)) {
            const int d = window->iota - window->gamma;
            auto &bucket = buckets.try_emplace(d, DistanceBucket{d, 0, 0.0}).first->second;
            bucket.window_count += 1;
            bucket.total_duration += window->duration;
        }
    }
    for (const auto &[d, bucket] : buckets) report.per_distance.push_back(bucket);
    return report;
}

std::vector<ScheduleViolation> validate_schedule(const PulseSchedule &schedule) {
    std::vector<ScheduleViolation> violations;
    const auto flag = [&violations](std::size_t index, std::string message) {
        violations.push_back(ScheduleViolation{index, std::move(message)});
    };

    double window_end = 0.0;
    double duration_sum = 0.0;
    bool seen_window = false;
    for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
        const PulseStep &step = schedule.steps[i];
        if (const auto *pulse = std::get_if<SingleQubitPulse>(&step)) {
            if (pulse->molecule < 1 || pulse->molecule > schedule.num_molecules) {
                flag(i, "molecule index out of range");
            }
            if (pulse->kind == PulseKind::kPhase && !std::isfinite(pulse->phi)) {
                flag(i, "phase pulse angle is not finite");
            }
            continue;
        }
        const auto &window = std::get<IsingWindow>(step);
        if (window.gamma >= window.iota) flag(i, "window needs gamma < iota");
        if (window.gamma < 1 || window.iota > schedule.num_molecules) {
            flag(i, "window molecule indices out of range");
        }
        if (!(window.energy > 0.0)) flag(i, "window energy must be positive");
        if (!(window.duration > 0.0)) flag(i, "window duration must be positive");
        if (window.mu < 0) flag(i, "window pulse order must be non-negative");
        const double expected_phase = (2.0 * window.mu + 1.0) * std::numbers::pi;
        if (!relatively_close(window.nominal_phase, expected_phase, 1e-12)) {
            flag(i, "window nominal phase is not (2 mu + 1) pi");
        }
        if (window.energy > 0.0) {
            const double expected_duration = expected_phase * schedule.params.hbar / window.energy;
            if (!relatively_close(window.duration, expected_duration, 1e-12)) {
                flag(i, "window duration does not match (2 mu + 1) pi hbar / energy");
            }
        }
        if (seen_window && window.start < window_end * (1.0 - 1e-12)) {
            flag(i, "window overlaps the previous interaction window");
        }
        window_end = window.start + window.duration;
        duration_sum += window.duration;
        seen_window = true;
    }

    if (!(duration_sum == 0.0 && schedule.total_interaction_time == 0.0) &&
        !relatively_close(schedule.total_interaction_time, duration_sum, 1e-12)) {
        flag(schedule.steps.size(), "total interaction time does not equal the window sum");
    }
    return violations;
}

}  // namespace qdqft
