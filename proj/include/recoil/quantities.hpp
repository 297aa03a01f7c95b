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

#include <istream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace recoil {

/// Fundamental constants in SI units (CODATA 2018). h, e and c are exact, so
/// hbar = h / 2pi is kept at full double precision rather than rounded.
struct PhysicalConstants {
    double c;         ///< speed of light, m/s
    double hbar;      ///< reduced Planck constant, J s
    double h;         ///< Planck constant, J s
    double e_charge;  ///< elementary charge, C
    double amu;       ///< unified atomic mass unit, kg
    double ev;        ///< electron-volt, J
    double epsilon0;  ///< vacuum permittivity, F/m
};

inline constexpr double planck_constant = 6.62607015e-34;

inline constexpr PhysicalConstants codata2018{
    .c = 299792458.0,
    .hbar = planck_constant / (2.0 * std::numbers::pi),
    .h = planck_constant,
    .e_charge = 1.602176634e-19,
    .amu = 1.66053906660e-27,
    .ev = 1.602176634e-19,
    .epsilon0 = 8.8541878128e-12,
};

/// A nuclear species with a gamma transition.
struct Isotope {
    std::string name;
    double mass_amu = 0.0;
    double gamma_energy_kev = 0.0;
    std::optional<double> excited_lifetime_s;
};

/// Bulk acoustic properties of a host material.
struct Medium {
    double mass_density = 0.0;  ///< kg/m^3
    double sound_speed = 0.0;   ///< m/s
};

/// One-dimensional chain: mass per unit length instead of per unit volume.
struct LinearMedium {
    double linear_density = 0.0;  ///< kg/m
    double sound_speed = 0.0;     ///< m/s
};

/// Named material record from a materials table.
struct Material {
    std::string name;
    Medium medium;
    std::optional<double> lattice_spacing_m;
};

double energy_kev_to_omega(double energy_kev);
double omega_to_energy_kev(double omega);
double mass_amu_to_kg(double mass_amu);

/// Throws DataError unless the isotope satisfies its invariants.
void validate(const Isotope& isotope);
/// Throws DataError unless density and sound speed are positive and finite.
void validate(const Medium& medium);

Medium make_medium(double mass_density, double sound_speed);

/// Linear density rho0 * a^2 of a cubic lattice column with spacing a.
LinearMedium linear_medium(const Medium& bulk, double lattice_spacing);

/// Chain of identical particles of the given mass spaced a apart (density m / a).
LinearMedium chain_medium(double particle_mass, double spacing, double sound_speed);

/// Parses the isotope table format:
///
///     name mass_amu gamma_energy_kev [excited_lifetime_s | -]
///
/// `#` starts a comment and blank lines are skipped. Malformed lines raise
/// ParseError (with line number); invariant violations and duplicate names
/// raise DataError.
std::vector<Isotope> load_isotope_table(std::istream& source);
std::vector<Isotope> load_isotope_table_file(const std::string& path);

/// Same layout as the isotope table:
///
///     name mass_density_kg_m3 sound_speed_m_s [lattice_spacing_m | -]
std::vector<Material> load_material_table(std::istream& source);
std::vector<Material> load_material_table_file(const std::string& path);

}  // namespace recoil
