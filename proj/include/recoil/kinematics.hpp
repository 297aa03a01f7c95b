// Copyright 2026 The recoil-lines Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "recoil/quantities.hpp"

namespace recoil {

/// Kinematic state of an oscillator of natural frequency omega0 that has
/// absorbed one quantum and oscillates in its well. SI units throughout.
struct RecoilSolution {
    double omega0 = 0.0;          ///< rad/s
    double mass = 0.0;            ///< kg
    double recoil_energy = 0.0;   ///< J
    double trap_omega = 0.0;      ///< rad/s, approximate closed form
    double trap_omega_exact = 0.0;///< rad/s, exact root of the conservation laws
    double recoil_velocity = 0.0; ///< m/s
    double amplitude_b = 0.0;     ///< m
    double lamb_dicke = 0.0;      ///< kb, dimensionless
    double excursion = 0.0;       ///< peak-to-peak 2b, m
    double validity_ratio = 0.0;  ///< hbar omega0 / (2 m c^2)
};

/// Largest validity ratio accepted by the exact solver and solve_recoil.
inline constexpr double max_validity_ratio = 0.1;

/// hbar omega0 / (2 m c^2).
double validity_ratio(double omega0, double mass);

/// E_r = (hbar omega0)^2 / (2 m c^2).
double recoil_energy(double omega0, double mass);

/// Omega = hbar omega0^2 / (2 m c^2); equals recoil_energy / hbar.
double trap_frequency_approx(double omega0, double mass);

/// Smaller positive root of
///
///     Omega^2 + (2 omega0 - 2 m c^2 / hbar) Omega + omega0^2 = 0,
///
/// i.e. the exact solution of momentum and energy conservation for
/// absorption of hbar (omega0 + Omega). Throws RegimeError when the validity
/// ratio is not below max_validity_ratio.
double trap_frequency_exact(double omega0, double mass);

/// V = hbar omega0 / (m c).
double recoil_velocity(double omega0, double mass);

/// b = V / Omega = 2 c / omega0. Independent of mass.
double trap_amplitude(double omega0, double mass);

/// kb = omega0 b / c.
double lamb_dicke(double omega0, double b);

RecoilSolution solve_recoil(double omega0, double mass);
RecoilSolution solve_recoil(const Isotope& isotope);

}  // namespace recoil
