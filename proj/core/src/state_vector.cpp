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

#include "qdqft/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdqft {

namespace {

void check_qubit_count(int num_qubits, int max_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw std::length_error("qubit count " + std::to_string(num_qubits) +
                                " exceeds the resource guard of " + std::to_string(max_qubits));
    }
}

void check_finite(double value, const char *name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

// Spreads the bits of `packed` so that bit position `pos` (from the LSB)
// becomes a zero gap. Positions must be applied lowest-first.
inline std::uint64_t insert_zero_bit(std::uint64_t packed, std::uint64_t mask) {
    return ((packed & ~(mask - 1)) << 1) | (packed & (mask - 1));
}

}  // namespace

StateVector::StateVector(int num_qubits, int max_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits, max_qubits);
    amps_.assign(std::size_t{1} << num_qubits, amplitude{0.0, 0.0});
    amps_[0] = amplitude{1.0, 0.0};
}

StateVector StateVector::basis_state(std::span<const int> bits, int max_qubits) {
    StateVector state(static_cast<int>(bits.size()), max_qubits);
    std::uint64_t index = 0;
    for (int bit : bits) {
        if (bit != 0 && bit != 1) {
            throw std::invalid_argument("basis bits must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(bit);
    }
    state.amps_[0] = amplitude{0.0, 0.0};
    state.amps_[index] = amplitude{1.0, 0.0};
    return state;
}

std::uint64_t StateVector::high_bit_mask(int q) const {
    if (q < 1 || q > num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range [1, " +
                                std::to_string(num_qubits_) + "]");
    }
    return std::uint64_t{1} << (num_qubits_ - q);
}

void StateVector::apply_hadamard(int q) {
    const std::uint64_t stride = high_bit_mask(q);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t block = 0; block < dim; block += 2 * stride) {
        for (std::uint64_t i = block; i < block + stride; ++i) {
            const amplitude a0 = amps_[i];
            const amplitude a1 = amps_[i + stride];
            amps_[i] = (a0 + a1) * inv_sqrt2;
            amps_[i + stride] = (a0 - a1) * inv_sqrt2;
        }
    }
}

void StateVector::apply_phase(int q, double phi) {
    const std::uint64_t mask = high_bit_mask(q);
    check_finite(phi, "phase angle");
    const amplitude factor = std::polar(1.0, phi);
    const std::uint64_t half = amps_.size() >> 1;
    for (std::uint64_t packed = 0; packed < half; ++packed) {
        amps_[insert_zero_bit(packed, mask) | mask] *= factor;
    }
}

void StateVector::apply_ising_evolution(int q1, int q2, double phase, double delta_phi) {
    if (q1 == q2) {
        throw std::invalid_argument("Ising evolution needs two distinct qubits");
    }
    const std::uint64_t m1 = high_bit_mask(q1);
    const std::uint64_t m2 = high_bit_mask(q2);
    check_finite(phase, "accumulated phase");
    check_finite(delta_phi, "phase error");
    const std::uint64_t lo = m1 < m2 ? m1 : m2;
    const std::uint64_t hi = m1 < m2 ? m2 : m1;
    const amplitude factor = std::polar(1.0, -(phase + delta_phi));
    const std::uint64_t quarter = amps_.size() >> 2;
    for (std::uint64_t packed = 0; packed < quarter; ++packed) {
        const std::uint64_t spread = insert_zero_bit(insert_zero_bit(packed, lo), hi);
        amps_[spread | lo | hi] *= factor;
    }
}

void StateVector::apply_cz(int q1, int q2) {
    apply_ising_evolution(q1, q2, std::numbers::pi, 0.0);
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const amplitude &a : amps_) total += std::norm(a);
    return total;
}

std::complex<double> inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("statevector dimension mismatch");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double state_fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

double max_error_up_to_global_phase(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("statevector dimension mismatch");
    }
    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double mag = std::abs(a[i]);
        if (mag > best) {
            best = mag;
            anchor = i;
        }
    }
    std::complex<double> align{1.0, 0.0};
    if (std::abs(b[anchor]) > 0.0 && std::abs(a[anchor]) > 0.0) {
        align = (a[anchor] / std::abs(a[anchor])) * std::conj(b[anchor] / std::abs(b[anchor]));
    }
    double err = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        err = std::max(err, std::abs(a[i] - align * b[i]));
    }
    return err;
}

}  // namespace qdqft
