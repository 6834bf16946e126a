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
#include <iosfwd>
#include <string>
#include <vector>

#include "qdqft/device.hpp"

namespace qdqft::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage/config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    int n = 0;
    DeviceParams params;
    int mu = 0;
    std::vector<double> sigmas;  // sweep-noise
    double sigma = 0.0;          // simulate
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::string input_bits;
    double threshold = 1e-3;
    std::string format;           // json | csv; empty picks the command default
    std::string out_path;         // empty writes to stdout
    std::string schedule_path;    // simulate from a compiled schedule file
    std::string metric = "process";
    bool raw_order = false;            // simulate: skip readout reversal
    bool inject_even_parity = false;   // verify: test hook, breaks Eq.-parity
};

int cmd_compile(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_analyze(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_sweep_noise(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv, dispatches to the subcommand, and maps every failure to the
/// exit-code contract above. All output goes to the passed streams.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qdqft::cli
