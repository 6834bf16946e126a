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

#include "qdqft/noise.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qdqft/schedule.hpp"

using namespace qdqft;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("delta-phi sampling") {
    SUBCASE("sigma = 0 draws exactly zero") {
        const NoiseModel silent{0.0, 99};
        for (std::uint64_t i = 0; i < 16; ++i) CHECK(sample_delta_phi(silent, i) == 0.0);
    }
    SUBCASE("fixed (seed, stream) is reproducible; streams differ") {
        const NoiseModel model{0.2, 42};
        for (std::uint64_t i = 0; i < 32; ++i) {
            CHECK(sample_delta_phi(model, i) == sample_delta_phi(model, i));
        }
        CHECK(sample_delta_phi(model, 0) != sample_delta_phi(model, 1));
        const NoiseModel other{0.2, 43};
        CHECK(sample_delta_phi(model, 7) != sample_delta_phi(other, 7));
    }
    SUBCASE("draws follow N(0, sigma) statistics") {
        const NoiseModel model{0.1, 7};
        const std::uint64_t count = 100000;
        std::vector<double> draws(count);
        for (std::uint64_t i = 0; i < count; ++i) draws[i] = sample_delta_phi(model, i);
        const double mean = pairwise_mean(draws);
        CHECK(std::abs(mean) < 3.0 * 0.1 / std::sqrt(static_cast<double>(count)));
        double sq = 0.0;
        for (double d : draws) sq += (d - mean) * (d - mean);
        const double std_dev = std::sqrt(sq / static_cast<double>(count - 1));
        CHECK(std_dev > 0.098);
        CHECK(std_dev < 0.102);
    }
}

TEST_CASE("gate process fidelity closed form") {
    CHECK(gate_process_fidelity(0.0) == 1.0);
    CHECK(gate_process_fidelity(kPi) == doctest::Approx(0.25).epsilon(1e-14));
    const double f = gate_process_fidelity(0.03 * kPi);
    CHECK(f == doctest::Approx(0.9983357367261549).epsilon(1e-12));
    CHECK(f >= 0.96);

    // Even function, and identical to the explicit-trace oracle.
    for (double delta : {0.01, 0.4, 1.9, 3.0}) {
        CHECK(gate_process_fidelity(delta) == gate_process_fidelity(-delta));
        const auto ideal = oracles::controlled_phase_ideal(kPi / 4.0);
        auto noisy = ideal;
        noisy[3][3] *= std::polar(1.0, -delta);
        CHECK(gate_process_fidelity(delta) ==
              doctest::Approx(oracles::process_fidelity_by_trace(ideal, noisy)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gate_process_fidelity(std::nan("")), std::invalid_argument);
}

TEST_CASE("basis-state average is blind to diagonal phase noise") {
    for (double delta : {0.0, 0.1, 1.0, 3.0}) {
        CHECK(gate_basis_state_fidelity(delta) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("Monte Carlo gate fidelity") {
    SUBCASE("sigma = 0 is exactly 1") {
        const FidelityReport report = monte_carlo_gate_fidelity(NoiseModel{0.0, 1}, 100);
        CHECK(report.mean_fidelity == 1.0);
        CHECK(report.std_error == 0.0);
        CHECK(report.metric_name == "process_fidelity");
    }
    SUBCASE("sigma = 0.03 pi stays above the 96% bound and tracks the analytic mean") {
        const FidelityReport report =
            monte_carlo_gate_fidelity(NoiseModel{0.03 * kPi, 2026}, 10000);
        CHECK(report.mean_fidelity >= 0.96);
        const double analytic = oracles::expected_process_fidelity(0.03 * kPi);
        CHECK(std::abs(report.mean_fidelity - analytic) < 3.0 * report.std_error);
    }
    SUBCASE("analytic agreement across sigmas") {
        for (double sigma : {0.01 * kPi, 0.03 * kPi, 0.1 * kPi}) {
            const FidelityReport report =
                monte_carlo_gate_fidelity(NoiseModel{sigma, 99}, 20000);
            CHECK(std::abs(report.mean_fidelity - oracles::expected_process_fidelity(sigma)) <
                  3.0 * report.std_error);
        }
    }
    SUBCASE("bit-identical reports under a fixed seed") {
        const FidelityReport a = monte_carlo_gate_fidelity(NoiseModel{0.05, 7}, 5000);
        const FidelityReport b = monte_carlo_gate_fidelity(NoiseModel{0.05, 7}, 5000);
        CHECK(a.mean_fidelity == b.mean_fidelity);
        CHECK(a.std_error == b.std_error);
    }
    SUBCASE("basis metric reports 1 regardless of sigma") {
        const FidelityReport report = monte_carlo_gate_fidelity(
            NoiseModel{0.2, 3}, 1000, GateFidelityMetric::kBasisStateAverage);
        CHECK(report.mean_fidelity == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(report.metric_name == "basis_state_fidelity");
    }
    SUBCASE("trial count guard") {
        CHECK_THROWS_AS(monte_carlo_gate_fidelity(NoiseModel{0.1, 1}, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("Monte Carlo QFT fidelity") {
    const DeviceParams params;
    const PulseSchedule schedule = lower(build_qft_circuit(3), params, 0);
    const std::vector<int> bits{1, 0, 1};

    SUBCASE("sigma = 0 gives mean 1") {
        const FidelityReport report =
            monte_carlo_qft_fidelity(schedule, bits, NoiseModel{0.0, 5}, 50);
        CHECK(report.mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("mean is nonincreasing as sigma doubles (paired seeds)") {
        double previous = 1.0;
        double previous_se = 0.0;
        for (double sigma : {0.02 * kPi, 0.04 * kPi, 0.08 * kPi}) {
            const FidelityReport report =
                monte_carlo_qft_fidelity(schedule, bits, NoiseModel{sigma, 31}, 2000);
            CHECK(report.mean_fidelity <=
                  previous + 3.0 * std::max(report.std_error, previous_se) + 1e-12);
            previous = report.mean_fidelity;
            previous_se = report.std_error;
        }
    }
    SUBCASE("a schedule without windows is noise-free") {
        const PulseSchedule trivial = lower(build_qft_circuit(1), params, 0);
        const std::vector<int> one_bit{1};
        const FidelityReport report =
            monte_carlo_qft_fidelity(trivial, one_bit, NoiseModel{0.5, 77}, 64);
        CHECK(report.mean_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("deterministic under a fixed seed") {
        const FidelityReport a =
            monte_carlo_qft_fidelity(schedule, bits, NoiseModel{0.05, 11}, 200);
        const FidelityReport b =
            monte_carlo_qft_fidelity(schedule, bits, NoiseModel{0.05, 11}, 200);
        CHECK(a.mean_fidelity == b.mean_fidelity);
        CHECK(a.std_error == b.std_error);
    }
}

TEST_CASE("pairwise mean") {
    const std::vector<double> values{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0};
    CHECK(pairwise_mean(values) == doctest::Approx(4.0).epsilon(1e-15));
    const std::vector<double> empty;
    CHECK_THROWS_AS(pairwise_mean(empty), std::invalid_argument);
}
