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

#include "recoil/kinematics.hpp"

#include <cmath>

#include "recoil/errors.hpp"

namespace recoil {

namespace {

constexpr double c = codata2018.c;
constexpr double hbar = codata2018.hbar;

void require_positive(double omega0, double mass) {
    if (!(std::isfinite(omega0) && omega0 > 0.0)) throw DomainError("omega0 must be positive");
    if (!(std::isfinite(mass) && mass > 0.0)) throw DomainError("mass must be positive");
}

}  // namespace

double validity_ratio(double omega0, double mass) {
    require_positive(omega0, mass);
    return hbar * omega0 / (2.0 * mass * c * c);
}

double recoil_energy(double omega0, double mass) {
    require_positive(omega0, mass);
    const double quantum = hbar * omega0;
    return quantum * quantum / (2.0 * mass * c * c);
}

double trap_frequency_approx(double omega0, double mass) {
    require_positive(omega0, mass);
    return hbar * omega0 * omega0 / (2.0 * mass * c * c);
}

double trap_frequency_exact(double omega0, double mass) {
    const double ratio = validity_ratio(omega0, mass);
    if (!(ratio < max_validity_ratio)) {
        throw RegimeError("hbar omega0 / 2mc^2 = " + std::to_string(ratio) +
                          " is outside the non-relativistic recoil regime");
    }
    // Omega^2 - (K - 2 omega0) Omega + omega0^2 = 0 with K = 2mc^2/hbar.
    // Discriminant (K - 2w)^2 - 4w^2 = K (K - 4w), evaluated in factored form.
    const double k = 2.0 * mass * c * c / hbar;
    const double disc = k * (k - 4.0 * omega0);
    if (!(disc > 0.0)) throw RegimeError("conservation laws have no real trap frequency");
    const double large = 0.5 * ((k - 2.0 * omega0) + std::sqrt(disc));
    return omega0 * omega0 / large;
}

double recoil_velocity(double omega0, double mass) {
    require_positive(omega0, mass);
    return hbar * omega0 / (mass * c);
}

double trap_amplitude(double omega0, double mass) {
    require_positive(omega0, mass);
    return 2.0 * c / omega0;
}

double lamb_dicke(double omega0, double b) {
    if (!(std::isfinite(omega0) && omega0 > 0.0)) throw DomainError("omega0 must be positive");
    if (!(std::isfinite(b) && b >= 0.0)) throw DomainError("amplitude must be non-negative");
    return omega0 * b / c;
}

RecoilSolution solve_recoil(double omega0, double mass) {
    RecoilSolution s;
    s.omega0 = omega0;
    s.mass = mass;
    s.validity_ratio = validity_ratio(omega0, mass);
    s.recoil_energy = recoil_energy(omega0, mass);
    s.trap_omega = trap_frequency_approx(omega0, mass);
    s.trap_omega_exact = trap_frequency_exact(omega0, mass);
    s.recoil_velocity = recoil_velocity(omega0, mass);
    s.amplitude_b = trap_amplitude(omega0, mass);
    s.lamb_dicke = lamb_dicke(omega0, s.amplitude_b);
    s.excursion = 2.0 * s.amplitude_b;
    return s;
}

RecoilSolution solve_recoil(const Isotope& isotope) {
    validate(isotope);
    return solve_recoil(energy_kev_to_omega(isotope.gamma_energy_kev),
                        mass_amu_to_kg(isotope.mass_amu));
}

}  // namespace recoil
