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

#include "qdqft/device.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qdqft {

namespace {
constexpr int kMaxQubitScan = 1 << 20;
}

void validate(const DeviceParams &params) {
    if (!(params.a > 0.0)) throw std::invalid_argument("dot spacing a must be positive");
    if (!(params.b > 0.0)) throw std::invalid_argument("molecule spacing b must be positive");
    if (!(params.epsilon_r >= 1.0)) {
        throw std::invalid_argument("relative permittivity must be at least 1");
    }
    if (!(params.coherence_time > 0.0)) {
        throw std::invalid_argument("coherence time must be positive");
    }
}

DeviceParams load_device_params(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open device config: " + path);
    }
    DeviceParams params;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string key;
        std::string eq;
        double value = 0.0;
        std::istringstream fields(line);
        if (!(fields >> key)) continue;  // blank line
        if (!(fields >> eq) || eq != "=" || !(fields >> value)) {
            throw std::invalid_argument("device config line " + std::to_string(line_no) +
                                        ": expected `key = value`");
        }
        if (key == "a_nm") {
            params.a = value * constants::kMeterPerNm;
        } else if (key == "b_nm") {
            params.b = value * constants::kMeterPerNm;
        } else if (key == "epsilon_r") {
            params.epsilon_r = value;
        } else if (key == "coherence_us") {
            params.coherence_time = value * constants::kSecondPerUs;
        } else {
            throw std::invalid_argument("device config line " + std::to_string(line_no) +
                                        ": unknown key `" + key + "`");
        }
    }
    validate(params);
    return params;
}

double coulomb_energy(const DeviceParams &params, int separation) {
    if (separation < 1) {
        throw std::invalid_argument("separation count must be at least 1");
    }
    const double d = static_cast<double>(separation);
    const double prefactor = 2.0 * params.e_charge * params.e_charge /
                             (4.0 * std::numbers::pi * params.epsilon_0 * params.epsilon_r);
    const double db = d * params.b;
    return prefactor * (1.0 / db - 1.0 / std::sqrt(params.a * params.a + db * db));
}

double cz_duration(const DeviceParams &params, int separation, int mu) {
    if (mu < 0) throw std::invalid_argument("pulse order mu must be non-negative");
    // (2mu+1) multiplies last so pulse orders scale the base window exactly.
    const double base = std::numbers::pi * params.hbar / coulomb_energy(params, separation);
    return (2.0 * mu + 1.0) * base;
}

double controlled_phase_theta(int gamma, int iota) {
    if (gamma >= iota) {
        throw std::invalid_argument("controlled-phase angle needs gamma < iota");
    }
    return std::numbers::pi / std::exp2(iota - gamma);
}

double energy_ratio(const DeviceParams &params, int num_molecules, EminConvention convention) {
    if (num_molecules < 2) {
        throw std::invalid_argument("energy ratio needs at least two molecules");
    }
    const int separation =
        convention == EminConvention::kSeparationN ? num_molecules : num_molecules - 1;
    return coulomb_energy(params, separation) / coulomb_energy(params, 1);
}

int max_qubits(const DeviceParams &params, double threshold, EminConvention convention) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("threshold must lie in (0, 1)");
    }
    int n = 1;  // ratio(1) = 1 by definition
    while (n < kMaxQubitScan && energy_ratio(params, n + 1, convention) >= threshold) ++n;
    if (n == kMaxQubitScan) {
        throw std::domain_error("qubit-count scan exceeded 2^20 molecules");
    }
    return n;
}

}  // namespace qdqft
