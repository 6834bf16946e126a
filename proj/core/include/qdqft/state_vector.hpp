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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qdqft {

// 2^26 amplitudes is about 1 GiB; anything larger must be opted into.
inline constexpr int kDefaultMaxQubits = 26;

/// Dense statevector over the singlet/triplet computational basis.
///
/// Qubit indices are 1-based (molecule numbering): qubit 1 is the most
/// significant bit of the basis index, so |j1 j2 ... jn> sits at index
/// sum_l j_l * 2^(n-l). All kernels are diagonal or 2x2-block local and
/// preserve the norm; amplitudes whose relevant bits do not match a kernel
/// are left bit-identical.
class StateVector {
  public:
    using amplitude = std::complex<double>;

    /// All-zeros basis state |00...0>.
    explicit StateVector(int num_qubits, int max_qubits = kDefaultMaxQubits);

    /// Basis state |bits[0] bits[1] ... bits[n-1]>, bits[0] on qubit 1.
    static StateVector basis_state(std::span<const int> bits,
                                   int max_qubits = kDefaultMaxQubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const amplitude> amplitudes() const { return amps_; }
    const amplitude &operator[](std::size_t index) const { return amps_[index]; }
    amplitude &operator[](std::size_t index) { return amps_[index]; }

    /// |0>_q -> (|0>+|1>)/sqrt(2), |1>_q -> (|0>-|1>)/sqrt(2).
    void apply_hadamard(int q);

    /// Multiplies every amplitude with bit q set by e^{i phi}.
    void apply_phase(int q, double phi);

    /// Ising ZZ window: multiplies every amplitude with both bits set by
    /// e^{-i(phase + delta_phi)}. The sign follows Schroedinger evolution
    /// e^{-iHt/hbar} of the |11> projector Hamiltonian.
    void apply_ising_evolution(int q1, int q2, double phase, double delta_phi = 0.0);

    /// Ising window at the odd-multiple working point: phase pi, no error.
    void apply_cz(int q1, int q2);

    double norm_squared() const;

  private:
    std::uint64_t high_bit_mask(int q) const;

    int num_qubits_;
    std::vector<amplitude> amps_;
};

std::complex<double> inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2; global-phase invariant by construction.
double state_fidelity(const StateVector &a, const StateVector &b);

/// Largest elementwise |a_k - b'_k| where b' is b rotated so that its phase
/// matches a's at a's largest-magnitude amplitude.
double max_error_up_to_global_phase(const StateVector &a, const StateVector &b);

}  // namespace qdqft
