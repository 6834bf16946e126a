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

#include <string>

#include "qdqft/constants.hpp"

namespace qdqft {

/// Geometry and material constants of the coupled-DQD chain. SI units
/// throughout; the reporting layer converts to eV/ns/nm.
struct DeviceParams {
    double a = 5e-9;    // intra-molecule dot spacing, m
    double b = 12e-9;   // inter-molecule spacing, m
    double epsilon_r = 12.9;  // GaAs static relative permittivity
    double e_charge = constants::kElementaryCharge;
    double epsilon_0 = constants::kVacuumPermittivity;
    double hbar = constants::kReducedPlanck;
    double coherence_time = 1.2e-6;  // spin coherence budget, s
};

/// Throws std::invalid_argument when a field is out of its domain.
void validate(const DeviceParams &params);

/// Key-value config file with keys a_nm, b_nm, epsilon_r, coherence_us.
/// Lines are `key = value`; '#' starts a comment. Missing keys keep their
/// defaults; unknown keys are an error.
DeviceParams load_device_params(const std::string &path);

/// Which separation count feeds E_min in the qubit-count estimate:
/// kSeparationN follows the printed expression (separation n), kFarthestPair
/// uses the actual farthest interacting pair (separation n-1).
enum class EminConvention { kSeparationN, kFarthestPair };

/// Coulomb coupling of two molecules `separation` sites apart:
/// (2 e^2 / 4 pi eps0 eps_r) [ 1/(d b) - 1/sqrt(a^2 + d^2 b^2) ], in joules.
double coulomb_energy(const DeviceParams &params, int separation);

/// Window length realizing a CZ at pulse order mu: (2 mu + 1) pi hbar / E(d).
double cz_duration(const DeviceParams &params, int separation, int mu);

/// Controlled-phase angle between molecules gamma < iota: pi / 2^(iota-gamma).
double controlled_phase_theta(int gamma, int iota);

/// E(sep)/E(1) with sep chosen by the convention; strictly decreasing in n.
double energy_ratio(const DeviceParams &params, int num_molecules,
                    EminConvention convention = EminConvention::kSeparationN);

/// Largest n with energy_ratio(n) >= threshold, by linear scan from n = 1
/// (ratio(1) is 1 by definition). Throws std::domain_error if the scan
/// exceeds 2^20 molecules before crossing the threshold.
int max_qubits(const DeviceParams &params, double threshold,
               EminConvention convention = EminConvention::kSeparationN);

}  // namespace qdqft
