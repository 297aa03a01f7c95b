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
#include <string_view>
#include <vector>

namespace recoil {

enum class Branch { emission, absorption };

std::string_view to_string(Branch branch);
/// Accepts "emission" or "absorption"; DomainError otherwise.
Branch parse_branch(std::string_view text);

struct SidebandLine {
    int order = 0;           ///< Bessel order m
    double frequency = 0.0;  ///< rad/s
    int offset = 0;          ///< (frequency - omega0) / Omega
    double weight = 0.0;
    Branch branch = Branch::emission;
};

struct SpectrumConfig {
    double kb = 2.0;
    /// Explicit truncation |m| <= max_order; when empty, chosen by auto_truncation_order.
    std::optional<int> max_order;
    double epsilon = 1e-12;
    int photon_occupation = 0;
    double suppression_w = 0.0;
};

struct LineSpectrum {
    std::vector<SidebandLine> lines;  ///< sorted by order
    int truncation_order = 0;
    double normalization_deficit = 0.0;
    double suppression_factor = 1.0;
};

/// Truncation deficit 1 - sum_{|m| <= max_order} J_m(kb)^2.
double normalization_deficit(double kb, int max_order);

/// Smallest M with normalization_deficit(kb, M) <= epsilon.
int auto_truncation_order(double kb, double epsilon);

/// Frequency offset, in units of Omega, at which Bessel order m radiates:
/// m - 1 for emission, m + 1 for absorption.
int branch_offset(int order, Branch branch);

/// Sideband spectrum at omega0 + (m -/+ 1) Omega with weights
/// J_m(kb)^2 exp(-W) times n + 1 (emission) or n (absorption).
LineSpectrum line_spectrum(double omega0, double trap_omega, const SpectrumConfig& config,
                           Branch branch);

/// Weight of the line at omega0 relative to the recoil-shifted line: J_1^2 / J_0^2.
double central_to_sideband_ratio(double kb);

/// First-order transition probability with the orientation phase averaged
/// (<cos^2 delta> = 1/2), evaluated in SI as
///
///     (2 e^2 / (eps0 h c^3)) omega0^2 dipole_sq J_order(kb)^2 (1/2) {n+1 | n}.
///
/// dipole_sq is |x_cd|^2 + |y_cd|^2 in m^2.
double transition_probability(double omega0, double dipole_sq, double kb, int order,
                              int photon_occupation, Branch branch);

struct SuppressionResult {
    double w = 0.0;
    /// exp(-W).
    double factor = 1.0;
    /// Each entry corresponds to one stated applicability condition.
    bool frequency_condition = false;
    bool amplitude_condition = false;
};

/// "Much less than" margin used by the applicability flags.
inline constexpr double suppression_margin = 10.0;

/// Well oscillating as a whole with amplitude b_s at omega_s:
/// exp(-W/2) = 1 - b_s^2/b^2. Flags b_s^2 omega_s^2 > b^2 Omega^2 and b_s^2 << b^2.
SuppressionResult debye_waller_from_well_oscillation(double b_s, double omega_s, double b,
                                                     double trap_omega);

struct PhononMode {
    double amplitude = 0.0;  ///< m
    double omega = 0.0;      ///< rad/s
};

/// Broad phonon spectrum: exp(-W) = 1 - sum b_i^2 / b^2. Flags
/// b^2 Omega^2 << sum b_i^2 omega_i^2 and b^2 > sum b_i^2.
SuppressionResult debye_waller_from_phonons(const std::vector<PhononMode>& modes, double b,
                                            double trap_omega);

}  // namespace recoil
