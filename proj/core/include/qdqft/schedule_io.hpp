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

#include "qdqft/circuit.hpp"
#include "qdqft/noise.hpp"
#include "qdqft/schedule.hpp"

namespace qdqft {

/// Schedule JSON. Top level, in fixed field order:
///   {n, params{a_nm, b_nm, epsilon_r, coherence_us}, mu, steps: [...],
///    total_interaction_time_s}
/// with steps one of
///   {"type": "h", "molecule": m}
///   {"type": "phase", "molecule": m, "phi_rad": x}
///   {"type": "ising", "gamma": g, "iota": i, "energy_ev": e, "duration_s": t}
/// Floats are emitted as shortest round-trip decimals.
std::string schedule_to_json(const PulseSchedule &schedule, int indent = 2);

/// Inverse of schedule_to_json. Window pulse orders are recovered from
/// duration * energy / (pi hbar) and start times are rebuilt cumulatively.
PulseSchedule schedule_from_json(const std::string &text);

void save_schedule(const PulseSchedule &schedule, const std::string &path);
PulseSchedule load_schedule(const std::string &path);

/// Circuit JSON: {n, gates: [{"gate": "h"|"phase"|"cz"|"cp", ...}]} with
/// 1-based qubit indices and angles in radians.
std::string circuit_to_json(const Circuit &circuit, int indent = 2);
Circuit circuit_from_json(const std::string &text);

std::string fidelity_report_to_json(const FidelityReport &report, int indent = 2);
std::string fidelity_report_csv_header();
std::string fidelity_report_csv_row(const FidelityReport &report);

}  // namespace qdqft
