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

#include "qdqft/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdqft {

Circuit build_qft_circuit(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("QFT circuit needs at least one qubit");
    }
    Circuit circuit;
    circuit.num_qubits = num_qubits;
    circuit.gates.reserve(static_cast<std::size_t>(num_qubits) * (num_qubits + 1) / 2);
    for (int l = 1; l <= num_qubits; ++l) {
        circuit.gates.push_back(HadamardGate{l});
        for (int i = l + 1; i <= num_qubits; ++i) {
            const double theta = std::numbers::pi / std::exp2(i - l);
            circuit.gates.push_back(ControlledPhaseGate{i, l, theta});
        }
    }
    return circuit;
}

std::vector<Gate> decompose_controlled_phase(const ControlledPhaseGate &gate) {
    const int c = gate.control;
    const int t = gate.target;
    const double half = gate.theta / 2.0;
    return {
        PhaseGate{c, half}, HadamardGate{t}, CZGate{c, t},
        HadamardGate{t},    PhaseGate{t, -half}, HadamardGate{t},
        CZGate{c, t},       HadamardGate{t}, PhaseGate{t, half},
    };
}

Circuit expand_circuit(const Circuit &circuit) {
    Circuit expanded;
    expanded.num_qubits = circuit.num_qubits;
    for (const Gate &gate : circuit.gates) {
        if (const auto *cp = std::get_if<ControlledPhaseGate>(&gate)) {
            for (const Gate &g : decompose_controlled_phase(*cp)) expanded.gates.push_back(g);
        } else {
            expanded.gates.push_back(gate);
        }
    }
    return expanded;
}

void apply_gate(StateVector &state, const Gate &gate) {
    std::visit(
        [&state](const auto &g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, HadamardGate>) {
                state.apply_hadamard(g.q);
            } else if constexpr (std::is_same_v<G, PhaseGate>) {
                state.apply_phase(g.q, g.phi);
            } else if constexpr (std::is_same_v<G, CZGate>) {
                state.apply_cz(g.q1, g.q2);
            } else {
                // diag(1,1,1,e^{i theta}) via the ZZ kernel's e^{-i phase}.
                state.apply_ising_evolution(g.control, g.target, -g.theta, 0.0);
            }
        },
        gate);
}

StateVector simulate_circuit(const Circuit &circuit, StateVector state) {
    if (circuit.num_qubits != state.num_qubits()) {
        throw std::invalid_argument("circuit and state qubit counts differ");
    }
    for (const Gate &gate : circuit.gates) apply_gate(state, gate);
    return state;
}

StateVector dft_reference_state(std::uint64_t j, int num_qubits) {
    StateVector state(num_qubits);
    const std::uint64_t dim = state.dim();
    if (j >= dim) {
        throw std::out_of_range("basis index out of range for qubit count");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        // e^{2 pi i jk/2^n} depends on jk mod 2^n only; reduce first so the
        // angle stays small. j*k < 2^52 for n <= 26, no overflow.
        const std::uint64_t residue = (j * k) & (dim - 1);
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(residue) / static_cast<double>(dim);
        state[k] = std::polar(scale, angle);
    }
    return state;
}

StateVector product_form_state(std::span<const int> bits) {
    const int n = static_cast<int>(bits.size());
    StateVector state(n);
    for (int bit : bits) {
        if (bit != 0 && bit != 1) {
            throw std::invalid_argument("basis bits must be 0 or 1");
        }
    }
    // Binary fraction carried by output position p: 0.j_{n+1-p} ... j_n.
    std::vector<double> fraction(static_cast<std::size_t>(n) + 1, 0.0);
    for (int p = 1; p <= n; ++p) {
        const int molecule = n + 1 - p;
        double value = 0.0;
        double weight = 0.5;
        for (int m = molecule; m <= n; ++m) {
            value += bits[m - 1] * weight;
            weight *= 0.5;
        }
        fraction[p] = value;
    }
    const std::uint64_t dim = state.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        double phase_turns = 0.0;
        for (int p = 1; p <= n; ++p) {
            if (k & (std::uint64_t{1} << (n - p))) phase_turns += fraction[p];
        }
        state[k] = std::polar(scale, 2.0 * std::numbers::pi * phase_turns);
    }
    return state;
}

StateVector readout_reversal(const StateVector &state) {
    const int n = state.num_qubits();
    StateVector reversed(n);
    const std::uint64_t dim = state.dim();
    for (std::uint64_t k = 0; k < dim; ++k) {
        std::uint64_t rev = 0;
        for (int bit = 0; bit < n; ++bit) {
            if (k & (std::uint64_t{1} << bit)) rev |= std::uint64_t{1} << (n - 1 - bit);
        }
        reversed[rev] = state[k];
    }
    return reversed;
}

}  // namespace qdqft
