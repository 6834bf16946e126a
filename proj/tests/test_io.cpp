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

#include "qdqft/schedule_io.hpp"

#include <doctest.h>

#include <cstring>
#include <vector>

#include <json.hpp>

using namespace qdqft;

namespace {

bool states_bit_identical(const StateVector &a, const StateVector &b) {
    return a.dim() == b.dim() &&
           std::memcmp(a.amplitudes().data(), b.amplitudes().data(),
                       a.dim() * sizeof(StateVector::amplitude)) == 0;
}

std::vector<std::string> keys_of(const nlohmann::ordered_json &j) {
    std::vector<std::string> keys;
    for (const auto &item : j.items()) keys.push_back(item.key());
    return keys;
}

}  // namespace

TEST_CASE("schedule JSON has the pinned field order") {
    const PulseSchedule schedule = lower(build_qft_circuit(2), DeviceParams{}, 0);
    const auto j = nlohmann::ordered_json::parse(schedule_to_json(schedule));

    CHECK(keys_of(j) == std::vector<std::string>{"n", "params", "mu", "steps",
                                                 "total_interaction_time_s"});
    CHECK(keys_of(j["params"]) ==
          std::vector<std::string>{"a_nm", "b_nm", "epsilon_r", "coherence_us"});
    for (const auto &step : j["steps"]) {
        const std::string type = step["type"];
        if (type == "h") {
            CHECK(keys_of(step) == std::vector<std::string>{"type", "molecule"});
        } else if (type == "phase") {
            CHECK(keys_of(step) == std::vector<std::string>{"type", "molecule", "phi_rad"});
        } else {
            CHECK(keys_of(step) == std::vector<std::string>{"type", "gamma", "iota", "energy_ev",
                                                            "duration_s"});
        }
    }
    CHECK(j["n"] == 2);
    CHECK(j["mu"] == 0);
    CHECK(j["steps"].size() == 11);
}

TEST_CASE("schedule JSON round-trips to an equivalent program") {
    const PulseSchedule original = lower(build_qft_circuit(4), DeviceParams{}, 1);
    const PulseSchedule reloaded = schedule_from_json(schedule_to_json(original));

    CHECK(schedule_to_json(reloaded) == schedule_to_json(original));
    CHECK(reloaded.num_molecules == original.num_molecules);
    CHECK(reloaded.mu == original.mu);
    CHECK(reloaded.steps.size() == original.steps.size());

    const std::vector<int> bits{1, 0, 1, 1};
    const NoiseModel model{0.04, 321};
    CHECK(states_bit_identical(simulate_schedule(original, bits, &model, 7),
                               simulate_schedule(reloaded, bits, &model, 7)));
    CHECK(validate_schedule(reloaded).empty());
}

TEST_CASE("per-window pulse orders survive serialization") {
    LoweringOptions options;
    options.mu = 0;
    options.mu_by_distance[2] = 3;
    const PulseSchedule original = lower(build_qft_circuit(4), DeviceParams{}, options);
    const PulseSchedule reloaded = schedule_from_json(schedule_to_json(original));
    REQUIRE(reloaded.steps.size() == original.steps.size());
    for (std::size_t i = 0; i < original.steps.size(); ++i) {
        if (const auto *w = std::get_if<IsingWindow>(&original.steps[i])) {
            const auto &r = std::get<IsingWindow>(reloaded.steps[i]);
            CHECK(r.mu == w->mu);
            CHECK(r.nominal_phase == w->nominal_phase);
        }
    }
}

TEST_CASE("schedule JSON rejects malformed input") {
    CHECK_THROWS(schedule_from_json("{"));
    CHECK_THROWS(schedule_from_json(R"({"n": 1, "params": {"a_nm": 5.0, "b_nm": 12.0,
        "epsilon_r": 12.9, "coherence_us": 1.2}, "mu": 0,
        "steps": [{"type": "wiggle"}], "total_interaction_time_s": 0.0})"));
}

TEST_CASE("circuit JSON round trip") {
    const Circuit circuit = build_qft_circuit(3);
    const Circuit reloaded = circuit_from_json(circuit_to_json(circuit));
    CHECK(reloaded.num_qubits == 3);
    REQUIRE(reloaded.gates.size() == circuit.gates.size());

    const std::vector<int> bits{1, 1, 0};
    const StateVector a = simulate_circuit(circuit, StateVector::basis_state(bits));
    const StateVector b = simulate_circuit(reloaded, StateVector::basis_state(bits));
    CHECK(states_bit_identical(a, b));

    // Primitive tags too.
    const Circuit primitive = expand_circuit(circuit);
    const Circuit reloaded_primitive = circuit_from_json(circuit_to_json(primitive));
    const StateVector c = simulate_circuit(primitive, StateVector::basis_state(bits));
    const StateVector d = simulate_circuit(reloaded_primitive, StateVector::basis_state(bits));
    CHECK(states_bit_identical(c, d));
}

TEST_CASE("fidelity report serialization") {
    const FidelityReport report{0.05, 1000, 0.9971, 0.0002, "process_fidelity"};
    CHECK(fidelity_report_csv_header() == "sigma,trials,mean_fidelity,std_error,metric");
    CHECK(fidelity_report_csv_row(report) == "0.05,1000,0.9971,0.0002,process_fidelity");
    const auto j = nlohmann::ordered_json::parse(fidelity_report_to_json(report));
    CHECK(keys_of(j) ==
          std::vector<std::string>{"sigma", "trials", "mean_fidelity", "std_error", "metric"});
    CHECK(j["trials"] == 1000);
    CHECK(j["metric"] == "process_fidelity");
}
