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

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qdqft {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal, same writer the JSON output uses.
std::string format_double(double value) {
    return ordered_json(value).dump();
}

ordered_json params_to_json(const DeviceParams &params) {
    ordered_json j;
    j["a_nm"] = params.a / constants::kMeterPerNm;
    j["b_nm"] = params.b / constants::kMeterPerNm;
    j["epsilon_r"] = params.epsilon_r;
    j["coherence_us"] = params.coherence_time / constants::kSecondPerUs;
    return j;
}

DeviceParams params_from_json(const ordered_json &j) {
    DeviceParams params;
    params.a = j.at("a_nm").get<double>() * constants::kMeterPerNm;
    params.b = j.at("b_nm").get<double>() * constants::kMeterPerNm;
    params.epsilon_r = j.at("epsilon_r").get<double>();
    params.coherence_time = j.at("coherence_us").get<double>() * constants::kSecondPerUs;
    return params;
}

}  // namespace

std::string schedule_to_json(const PulseSchedule &schedule, int indent) {
    ordered_json j;
    j["n"] = schedule.num_molecules;
    j["params"] = params_to_json(schedule.params);
    j["mu"] = schedule.mu;
    ordered_json steps = ordered_json::array();
    for (const PulseStep &step : schedule.steps) {
        ordered_json s;
        if (const auto *pulse = std::get_if<SingleQubitPulse>(&step)) {
            if (pulse->kind == PulseKind::kHadamard) {
                s["type"] = "h";
                s["molecule"] = pulse->molecule;
            } else {
                s["type"] = "phase";
                s["molecule"] = pulse->molecule;
                s["phi_rad"] = pulse->phi;
            }
        } else {
            const auto &window = std::get<IsingWindow>(step);
            s["type"] = "ising";
            s["gamma"] = window.gamma;
            s["iota"] = window.iota;
            s["energy_ev"] = window.energy / constants::kJoulePerEv;
            s["duration_s"] = window.duration;
        }
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["total_interaction_time_s"] = schedule.total_interaction_time;
    return j.dump(indent);
}

PulseSchedule schedule_from_json(const std::string &text) {
    const ordered_json j = ordered_json::parse(text);
    PulseSchedule schedule;
    schedule.num_molecules = j.at("n").get<int>();
    schedule.params = params_from_json(j.at("params"));
    schedule.mu = j.at("mu").get<int>();
    double clock = 0.0;
    for (const ordered_json &s : j.at("steps")) {
        const std::string type = s.at("type").get<std::string>();
        if (type == "h") {
            schedule.steps.push_back(
                SingleQubitPulse{s.at("molecule").get<int>(), PulseKind::kHadamard, 0.0});
        } else if (type == "phase") {
            schedule.steps.push_back(SingleQubitPulse{s.at("molecule").get<int>(),
                                                      PulseKind::kPhase,
                                                      s.at("phi_rad").get<double>()});
        } else if (type == "ising") {
            IsingWindow window{};
            window.gamma = s.at("gamma").get<int>();
            window.iota = s.at("iota").get<int>();
            window.energy = s.at("energy_ev").get<double>() * constants::kJoulePerEv;
            window.duration = s.at("duration_s").get<double>();
            const double odd_multiple =
                window.duration * window.energy / (schedule.params.hbar * std::numbers::pi);
            window.mu = static_cast<int>(std::lround((odd_multiple - 1.0) / 2.0));
            if (window.mu < 0) {
                throw std::invalid_argument("ising step implies a negative pulse order");
            }
            window.nominal_phase = (2.0 * window.mu + 1.0) * std::numbers::pi;
            window.start = clock;
            clock += window.duration;
            schedule.steps.push_back(window);
        } else {
            throw std::invalid_argument("unknown step type `" + type + "`");
        }
    }
    schedule.total_interaction_time = j.at("total_interaction_time_s").get<double>();
    return schedule;
}

void save_schedule(const PulseSchedule &schedule, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write schedule file: " + path);
    out << schedule_to_json(schedule) << '\n';
}

PulseSchedule load_schedule(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read schedule file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return schedule_from_json(buffer.str());
}

std::string circuit_to_json(const Circuit &circuit, int indent) {
    ordered_json j;
    j["n"] = circuit.num_qubits;
    ordered_json gates = ordered_json::array();
    for (const Gate &gate : circuit.gates) {
        ordered_json g;
        std::visit(
            [&g](const auto &concrete) {
                using G = std::decay_t<decltype(concrete)>;
                if constexpr (std::is_same_v<G, HadamardGate>) {
                    g["gate"] = "h";
                    g["q"] = concrete.q;
                } else if constexpr (std::is_same_v<G, PhaseGate>) {
                    g["gate"] = "phase";
                    g["q"] = concrete.q;
                    g["phi_rad"] = concrete.phi;
                } else if constexpr (std::is_same_v<G, CZGate>) {
                    g["gate"] = "cz";
                    g["q1"] = concrete.q1;
                    g["q2"] = concrete.q2;
                } else {
                    g["gate"] = "cp";
                    g["control"] = concrete.control;
                    g["target"] = concrete.target;
                    g["theta_rad"] = concrete.theta;
                }
            },
            gate);
        gates.push_back(std::move(g));
    }
    j["gates"] = std::move(gates);
    return j.dump(indent);
}

Circuit circuit_from_json(const std::string &text) {
    const ordered_json j = ordered_json::parse(text);
    Circuit circuit;
    circuit.num_qubits = j.at("n").get<int>();
    for (const ordered_json &g : j.at("gates")) {
        const std::string tag = g.at("gate").get<std::string>();
        if (tag == "h") {
            circuit.gates.push_back(HadamardGate{g.at("q").get<int>()});
        } else if (tag == "phase") {
            circuit.gates.push_back(PhaseGate{g.at("q").get<int>(), g.at("phi_rad").get<double>()});
        } else if (tag == "cz") {
            circuit.gates.push_back(CZGate{g.at("q1").get<int>(), g.at("q2").get<int>()});
        } else if (tag == "cp") {
            circuit.gates.push_back(ControlledPhaseGate{g.at("control").get<int>(),
                                                        g.at("target").get<int>(),
                                                        g.at("theta_rad").get<double>()});
        } else {
            throw std::invalid_argument("unknown gate tag `" + tag + "`");
        }
    }
    return circuit;
}

std::string fidelity_report_to_json(const FidelityReport &report, int indent) {
    ordered_json j;
    j["sigma"] = report.sigma;
    j["trials"] = report.trials;
    j["mean_fidelity"] = report.mean_fidelity;
    j["std_error"] = report.std_error;
    j["metric"] = report.metric_name;
    return j.dump(indent);
}

std::string fidelity_report_csv_header() {
    return "sigma,trials,mean_fidelity,std_error,metric";
}

std::string fidelity_report_csv_row(const FidelityReport &report) {
    std::ostringstream row;
    row << format_double(report.sigma) << ',' << report.trials << ','
        << format_double(report.mean_fidelity) << ',' << format_double(report.std_error) << ','
        << report.metric_name;
    return row.str();
}

}  // namespace qdqft
