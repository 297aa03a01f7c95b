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

#include "recoil/relaxation.hpp"

#include <cmath>
#include <numbers>

#include "recoil/errors.hpp"

namespace recoil {

namespace {

using std::numbers::pi;

void require_positive(double value, const char* what) {
    if (!(std::isfinite(value) && value > 0.0)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

void require_medium(const Medium& m) {
    require_positive(m.mass_density, "mass density");
    require_positive(m.sound_speed, "sound speed");
}

void require_medium(const LinearMedium& m) {
    require_positive(m.linear_density, "linear density");
    require_positive(m.sound_speed, "sound speed");
}

}  // namespace

double sound_wavelength(double trap_omega, double sound_speed) {
    require_positive(trap_omega, "trap frequency");
    require_positive(sound_speed, "sound speed");
    return 2.0 * pi * sound_speed / trap_omega;
}

double sound_wavelength(double trap_omega, const Medium& medium) {
    require_medium(medium);
    return sound_wavelength(trap_omega, medium.sound_speed);
}

PhononCheck phonon_feasibility(const RecoilSolution& solution, const Medium& medium) {
    require_medium(medium);
    require_positive(solution.trap_omega, "trap frequency");
    const double vs = medium.sound_speed;
    PhononCheck check;
    check.velocity_ratio = solution.recoil_velocity / vs;
    check.momentum_ratio = solution.validity_ratio * codata2018.c / vs;
    check.ks_b = solution.trap_omega / vs * solution.amplitude_b;
    return check;
}

double sound_field_amplitude(double mass, double b, double trap_omega, const Medium& medium) {
    require_positive(mass, "mass");
    require_positive(b, "amplitude");
    require_positive(trap_omega, "trap frequency");
    require_medium(medium);
    const double vs = medium.sound_speed;
    return mass * b * trap_omega * trap_omega / (8.0 * vs * vs);
}

double emission_rate_ratio(double mass, const LinearMedium& medium, double trap_omega) {
    require_positive(mass, "mass");
    require_medium(medium);
    const double lambda = sound_wavelength(trap_omega, medium.sound_speed);
    return mass / (medium.linear_density * lambda) * trap_omega / 16.0;
}

double relaxation_time_1d(double mass, const LinearMedium& medium, double trap_omega) {
    require_positive(mass, "mass");
    require_medium(medium);
    const double lambda = sound_wavelength(trap_omega, medium.sound_speed);
    return 8.0 * medium.linear_density * lambda / (pi * mass * trap_omega);
}

double relaxation_time_3d(double mass, const Medium& medium, double omega0, double trap_omega) {
    require_positive(mass, "mass");
    require_positive(omega0, "omega0");
    require_medium(medium);
    const double lambda = sound_wavelength(trap_omega, medium.sound_speed);
    const double mass_ratio = medium.mass_density * lambda * lambda * lambda / mass;
    return 3.0 * mass_ratio * omega0 / (pi * pi * trap_omega * trap_omega);
}

HierarchyVerdict hierarchy_report(double tau, double trap_omega,
                                  std::optional<double> excited_lifetime, double margin) {
    require_positive(tau, "relaxation time");
    require_positive(trap_omega, "trap frequency");
    require_positive(margin, "margin");
    HierarchyVerdict v;
    v.period = 2.0 * pi / trap_omega;
    v.ok_period = tau > margin * v.period;
    if (excited_lifetime) {
        require_positive(*excited_lifetime, "excited lifetime");
        v.ok_lifetime = tau > margin * *excited_lifetime;
    }
    return v;
}

RelaxationReport relaxation_report(const RecoilSolution& solution, const RelaxationInputs& in) {
    require_medium(in.medium);
    const double omega = solution.trap_omega;
    const double mass = solution.mass;

    RelaxationReport r;
    r.sound_wavelength = sound_wavelength(omega, in.medium);
    r.period = 2.0 * pi / omega;
    r.feasibility = phonon_feasibility(solution, in.medium);
    r.sound_field_amplitude = sound_field_amplitude(mass, solution.amplitude_b, omega, in.medium);
    r.tau_3d = relaxation_time_3d(mass, in.medium, solution.omega0, omega);

    // Without a lattice spacing the 1D chain holds one particle per wavelength;
    // the consistency ratio does not depend on this choice.
    LinearMedium chain;
    if (in.lattice_spacing) {
        chain = linear_medium(in.medium, *in.lattice_spacing);
        r.linear_density_from_lattice = true;
    } else {
        chain = chain_medium(mass, r.sound_wavelength, in.medium.sound_speed);
    }
    r.linear_density = chain.linear_density;
    r.mass_ratio_1d = mass / (chain.linear_density * r.sound_wavelength);
    r.emission_rate_ratio = emission_rate_ratio(mass, chain, omega);
    r.tau_1d = relaxation_time_1d(mass, chain, omega);
    r.energy_balance_time = 1.0 / r.emission_rate_ratio;
    r.consistency_ratio = r.energy_balance_time / r.tau_1d;

    r.hierarchy_1d = hierarchy_report(r.tau_1d, omega, in.excited_lifetime, in.margin);
    r.hierarchy_3d = hierarchy_report(r.tau_3d, omega, in.excited_lifetime, in.margin);
    return r;
}

}  // namespace recoil
