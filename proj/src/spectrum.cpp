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

#include "recoil/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "recoil/bessel.hpp"
#include "recoil/errors.hpp"
#include "recoil/quantities.hpp"

namespace recoil {

namespace {

// Orders beyond kb + this many are below 1e-30 in J_m^2 for the supported range.
constexpr int tail_margin = 60;

void check_kb(double kb) {
    if (!std::isfinite(kb) || kb < 0.0 || kb > bessel_max_argument) {
        throw DomainError("Lamb-Dicke parameter must lie in [0, 50]");
    }
}

int tail_order(double kb, int at_least) {
    const int natural = static_cast<int>(std::ceil(kb)) + tail_margin;
    return std::min(bessel_max_order, std::max(natural, at_least));
}

// tail[M] = 2 sum_{m > M} J_m^2, computed from the small end upward so the
// deficit keeps full relative precision instead of cancelling against 1.
std::vector<double> deficit_table(const std::vector<double>& j) {
    std::vector<double> tail(j.size(), 0.0);
    for (std::size_t m = j.size() - 1; m-- > 0;) tail[m] = tail[m + 1] + 2.0 * j[m + 1] * j[m + 1];
    return tail;
}

}  // namespace

std::string_view to_string(Branch branch) {
    return branch == Branch::emission ? "emission" : "absorption";
}

Branch parse_branch(std::string_view text) {
    if (text == "emission") return Branch::emission;
    if (text == "absorption") return Branch::absorption;
    throw DomainError("unknown branch '" + std::string(text) + "'");
}

double normalization_deficit(double kb, int max_order) {
    check_kb(kb);
    if (max_order < 0) throw DomainError("truncation order must be non-negative");
    const int top = tail_order(kb, max_order + 1);
    if (max_order >= top) return 0.0;
    return deficit_table(bessel_j_sequence(top, kb))[max_order];
}

int auto_truncation_order(double kb, double epsilon) {
    check_kb(kb);
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    const int top = tail_order(kb, 0);
    const auto tail = deficit_table(bessel_j_sequence(top, kb));
    for (int m = 0; m <= top; ++m) {
        if (tail[m] <= epsilon) return m;
    }
    return top;
}

int branch_offset(int order, Branch branch) {
    return branch == Branch::emission ? order - 1 : order + 1;
}

LineSpectrum line_spectrum(double omega0, double trap_omega, const SpectrumConfig& config,
                           Branch branch) {
    if (!(std::isfinite(trap_omega) && trap_omega > 0.0)) {
        throw DomainError("trap frequency must be positive");
    }
    if (!(std::isfinite(omega0) && omega0 > trap_omega)) {
        throw DomainError("omega0 must exceed the trap frequency");
    }
    check_kb(config.kb);
    if (config.photon_occupation < 0) throw DomainError("photon occupation must be >= 0");
    if (!(std::isfinite(config.suppression_w) && config.suppression_w >= 0.0)) {
        throw DomainError("suppression exponent W must be >= 0");
    }
    if (config.max_order && (*config.max_order < 0 || *config.max_order > bessel_max_order)) {
        throw DomainError("max_order must lie in [0, 200]");
    }

    LineSpectrum spectrum;
    spectrum.truncation_order =
        config.max_order ? *config.max_order : auto_truncation_order(config.kb, config.epsilon);
    spectrum.suppression_factor = std::exp(-config.suppression_w);

    const int m_max = spectrum.truncation_order;
    const auto j = bessel_j_sequence(tail_order(config.kb, m_max), config.kb);
    spectrum.normalization_deficit = m_max < static_cast<int>(j.size()) ? deficit_table(j)[m_max] : 0.0;

    const double occupation = branch == Branch::emission ? config.photon_occupation + 1.0
                                                         : double(config.photon_occupation);
    const double scale = spectrum.suppression_factor * occupation;
    spectrum.lines.reserve(2 * static_cast<std::size_t>(m_max) + 1);
    for (int m = -m_max; m <= m_max; ++m) {
        const double jm = j[static_cast<std::size_t>(std::abs(m))];
        SidebandLine line;
        line.order = m;
        line.offset = branch_offset(m, branch);
        line.frequency = omega0 + line.offset * trap_omega;
        line.weight = jm * jm * scale;
        line.branch = branch;
        spectrum.lines.push_back(line);
    }
    return spectrum;
}

double central_to_sideband_ratio(double kb) {
    check_kb(kb);
    const auto j = bessel_j_sequence(1, kb);
    if (std::abs(j[0]) <= 1e-14) {
        throw SingularityError("J_0(kb) vanishes; the sideband ratio is undefined");
    }
    return (j[1] * j[1]) / (j[0] * j[0]);
}

double transition_probability(double omega0, double dipole_sq, double kb, int order,
                              int photon_occupation, Branch branch) {
    if (!(std::isfinite(omega0) && omega0 > 0.0)) throw DomainError("omega0 must be positive");
    if (!(std::isfinite(dipole_sq) && dipole_sq >= 0.0)) {
        throw DomainError("dipole matrix element must be non-negative");
    }
    if (photon_occupation < 0) throw DomainError("photon occupation must be >= 0");
    check_kb(kb);
    const auto& k = codata2018;
    // 8 pi e^2 / (h c^3) in Gaussian units becomes 2 e^2 / (eps0 h c^3) in SI.
    const double prefactor = 2.0 * k.e_charge * k.e_charge / (k.epsilon0 * k.h * k.c * k.c * k.c);
    const double jm = bessel_j(order, kb);
    const double occupation =
        branch == Branch::emission ? photon_occupation + 1.0 : double(photon_occupation);
    return prefactor * omega0 * omega0 * dipole_sq * jm * jm * 0.5 * occupation;
}

SuppressionResult debye_waller_from_well_oscillation(double b_s, double omega_s, double b,
                                                     double trap_omega) {
    if (!(std::isfinite(b) && b > 0.0)) throw DomainError("trap amplitude must be positive");
    if (!(std::isfinite(b_s) && b_s >= 0.0)) throw DomainError("well amplitude must be >= 0");
    if (!(std::isfinite(omega_s) && omega_s >= 0.0) || !(std::isfinite(trap_omega) && trap_omega > 0.0)) {
        throw DomainError("frequencies must be non-negative");
    }
    const double r = (b_s * b_s) / (b * b);
    if (!(r < 1.0)) throw DomainError("well amplitude must be smaller than the trap amplitude");
    SuppressionResult out;
    out.w = -2.0 * std::log1p(-r);
    out.factor = std::exp(-out.w);
    out.frequency_condition = b_s * b_s * omega_s * omega_s > b * b * trap_omega * trap_omega;
    out.amplitude_condition = suppression_margin * b_s * b_s < b * b;
    return out;
}

SuppressionResult debye_waller_from_phonons(const std::vector<PhononMode>& modes, double b,
                                            double trap_omega) {
    if (!(std::isfinite(b) && b > 0.0)) throw DomainError("trap amplitude must be positive");
    if (!(std::isfinite(trap_omega) && trap_omega > 0.0)) {
        throw DomainError("trap frequency must be positive");
    }
    double amp_sq = 0.0;
    double energy_like = 0.0;
    for (const auto& mode : modes) {
        if (!(std::isfinite(mode.amplitude) && mode.amplitude >= 0.0) ||
            !(std::isfinite(mode.omega) && mode.omega >= 0.0)) {
            throw DomainError("phonon modes need non-negative amplitude and frequency");
        }
        amp_sq += mode.amplitude * mode.amplitude;
        energy_like += mode.amplitude * mode.amplitude * mode.omega * mode.omega;
    }
    const double r = amp_sq / (b * b);
    if (!(r < 1.0)) throw DomainError("phonon amplitudes must sum below the trap amplitude");
    SuppressionResult out;
    out.w = -std::log1p(-r);
    out.factor = std::exp(-out.w);
    out.frequency_condition = suppression_margin * b * b * trap_omega * trap_omega < energy_like;
    out.amplitude_condition = b * b > amp_sq;
    return out;
}

}  // namespace recoil
