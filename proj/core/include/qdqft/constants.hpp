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

namespace qdqft::constants {

// CODATA 2018 / exact-SI values. All internal arithmetic is SI; reporting
// layers convert to eV / ns / nm. Tests read this same table.
inline constexpr double kElementaryCharge = 1.602176634e-19;     // C (exact)
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kReducedPlanck = 1.054571817e-34;        // J s

inline constexpr double kJoulePerEv = kElementaryCharge;
inline constexpr double kMeterPerNm = 1e-9;
inline constexpr double kSecondPerUs = 1e-6;

}  // namespace qdqft::constants
