// Copyright 2026 The qsg-sim Authors
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

#include <numbers>

namespace qsg {

/// SI constants (CODATA 2018). Exactly one instance exists: `kPhysical`.
struct PhysicalConstants {
    double mu0;       // T m / A
    double h;         // J s
    double hbar;      // J s
    double mu_B;      // J / T
    double e_charge;  // C
    double Phi0;      // Wb
    double g_grav;    // m / s^2
    double m_Rb87;    // kg
};

namespace detail {
constexpr double kPlanck = 6.62607015e-34;
constexpr double kElementaryCharge = 1.602176634e-19;
constexpr double kAtomicMassUnit = 1.66053906660e-27;
}  // namespace detail

inline constexpr PhysicalConstants kPhysical{
    .mu0 = 1.25663706212e-6,
    .h = detail::kPlanck,
    .hbar = detail::kPlanck / (2.0 * std::numbers::pi),
    .mu_B = 9.2740100783e-24,
    .e_charge = detail::kElementaryCharge,
    .Phi0 = detail::kPlanck / (2.0 * detail::kElementaryCharge),
    .g_grav = 9.80665,
    .m_Rb87 = 86.909180527 * detail::kAtomicMassUnit,
};

}  // namespace qsg
