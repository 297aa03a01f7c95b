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

#include <optional>

#include "recoil/kinematics.hpp"
#include "recoil/quantities.hpp"

namespace recoil {

/// Ratios that decide whether recoil energy can pass directly to a phonon.
struct PhononCheck {
    double velocity_ratio = 0.0;  ///< V / v_s
    double momentum_ratio = 0.0;  ///< (hbar Omega / v_s) / (hbar omega0 / c)
    double ks_b = 0.0;            ///< (Omega / v_s) b
};

/// Default factor used for "much greater than".
inline constexpr double default_hierarchy_margin = 10.0;

struct HierarchyVerdict {
    double period = 0.0;
    bool ok_period = false;
    std::optional<bool> ok_lifetime;
};

struct RelaxationReport {
    double sound_wavelength = 0.0;
    double period = 0.0;
    PhononCheck feasibility;
    double sound_field_amplitude = 0.0;
    double tau_3d = 0.0;
    double linear_density = 0.0;
    double mass_ratio_1d = 0.0;
    double emission_rate_ratio = 0.0;
    double tau_1d = 0.0;
    /// hbar Omega / I: the decay time implied by the emitted intensity.
    double energy_balance_time = 0.0;
    /// energy_balance_time / tau_1d; 2 pi for the formulas as written.
    double consistency_ratio = 0.0;
    /// True when linear_density came from a user lattice spacing rather than m / lambda_s.
    bool linear_density_from_lattice = false;
    HierarchyVerdict hierarchy_1d;
    HierarchyVerdict hierarchy_3d;
};

/// lambda_s = 2 pi v_s / Omega.
double sound_wavelength(double trap_omega, double sound_speed);
double sound_wavelength(double trap_omega, const Medium& medium);

PhononCheck phonon_feasibility(const RecoilSolution& solution, const Medium& medium);

/// Amplitude m b Omega^2 / (8 v_s^2) of the radiated density wave, per unit cross-section.
double sound_field_amplitude(double mass, double b, double trap_omega, const Medium& medium);

/// I / (hbar Omega) = (1/16) (m / (rho1 lambda_s)) Omega, in 1/s.
double emission_rate_ratio(double mass, const LinearMedium& medium, double trap_omega);

/// tau = 8 rho1 lambda_s / (pi m Omega).
double relaxation_time_1d(double mass, const LinearMedium& medium, double trap_omega);

/// tau = 3 (rho0 lambda_s^3 / m) omega0 / (pi^2 Omega^2).
double relaxation_time_3d(double mass, const Medium& medium, double omega0, double trap_omega);

/// Compares tau against margin * (2 pi / Omega) and, when given, margin * lifetime.
HierarchyVerdict hierarchy_report(double tau, double trap_omega,
                                  std::optional<double> excited_lifetime,
                                  double margin = default_hierarchy_margin);

struct RelaxationInputs {
    Medium medium;
    /// Used to build the 1D linear density rho0 a^2.
    std::optional<double> lattice_spacing;
    std::optional<double> excited_lifetime;
    double margin = default_hierarchy_margin;
};

RelaxationReport relaxation_report(const RecoilSolution& solution, const RelaxationInputs& inputs);

}  // namespace recoil
