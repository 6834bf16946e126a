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
#include <variant>
#include <vector>

#include "qdqft/state_vector.hpp"

namespace qdqft {

struct HadamardGate {
    int q;
};

struct PhaseGate {
    int q;
    double phi;  // rad; |1> picks up e^{i phi}
};

struct CZGate {
    int q1;
    int q2;
};

struct ControlledPhaseGate {
    int control;
    int target;
    double theta;  // rad; |11> picks up e^{i theta}
};

using Gate = std::variant<HadamardGate, PhaseGate, CZGate, ControlledPhaseGate>;

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
};

/// The discrete-QFT gate list: for l = 1..n a Hadamard on qubit l followed by
/// controlled phases theta = pi/2^(i-l) controlled by each qubit i > l.
/// No terminal swaps; readout reversal is a separate relabeling step.
Circuit build_qft_circuit(int num_qubits);

/// Rewrites a controlled phase as the nine-factor product over {phase, H, CZ},
/// listed in execution order (first entry executes first).
std::vector<Gate> decompose_controlled_phase(const ControlledPhaseGate &gate);

/// Replaces every controlled phase by its nine-gate decomposition.
Circuit expand_circuit(const Circuit &circuit);

void apply_gate(StateVector &state, const Gate &gate);

/// Applies gates in list order.
StateVector simulate_circuit(const Circuit &circuit, StateVector state);

/// Independent end-to-end oracle: amplitude at index k is
/// e^{2 pi i j k / 2^n} / 2^(n/2).
StateVector dft_reference_state(std::uint64_t j, int num_qubits);

/// The tensor-product output form: position p (1-based, most significant
/// first) carries (|0> + e^{2 pi i 0.j_{n+1-p}...j_n} |1>)/sqrt(2), the state
/// read out of molecule n+1-p. Equal to dft_reference_state of the same bits.
StateVector product_form_state(std::span<const int> bits);

/// Reversed-order readout as an index permutation: qubit l <-> qubit n+1-l.
StateVector readout_reversal(const StateVector &state);

}  // namespace qdqft
