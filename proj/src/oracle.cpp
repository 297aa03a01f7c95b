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

#include "recoil/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "recoil/bessel.hpp"
#include "recoil/errors.hpp"
#include "recoil/quantities.hpp"

namespace recoil::oracle {

namespace {

using std::numbers::pi;

constexpr int first_panels = 4;
constexpr int max_bisection_steps = 4000;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_kb(double kb) {
    if (!std::isfinite(kb) || std::abs(kb) > bessel_max_argument) {
        throw DomainError("kb must satisfy |kb| <= 50");
    }
}

std::complex<double> integrand(double kb, int order, double theta) {
    const double phase = kb * std::sin(theta) - order * theta;
    return {std::cos(phase), std::sin(phase)};
}

// Mean of the integrand over the `panels` midpoints offset half a panel.
std::complex<double> midpoint_mean(double kb, int order, int panels) {
    std::complex<double> sum = 0.0;
    const double h = 2.0 * pi / panels;
    for (int j = 0; j < panels; ++j) sum += integrand(kb, order, (j + 0.5) * h);
    return sum / double(panels);
}

}  // namespace

std::complex<double> trapezoid_sideband(double kb, int order, int panels) {
    check_kb(kb);
    if (panels < 1) throw DomainError("panel count must be positive");
    std::complex<double> sum = 0.0;
    const double h = 2.0 * pi / panels;
    for (int j = 0; j < panels; ++j) sum += integrand(kb, order, j * h);
    return sum / double(panels);
}

std::complex<double> fourier_sideband_coefficient(double kb, int order,
                                                  const QuadratureSettings& settings) {
    check_kb(kb);
    if (!is_power_of_two(settings.panel_count) || settings.panel_count < first_panels) {
        throw DomainError("panel count must be a power of two >= 4");
    }
    if (!(settings.tolerance > 0.0)) throw DomainError("tolerance must be positive");

    // Periodic trapezoid with panel doubling; each refinement reuses the
    // previous nodes and adds the midpoints. N nodes alias harmonic m onto
    // m + kN, so refinement starts above 2|m| where no alias equals m.
    int panels = first_panels;
    while (panels <= 2 * std::abs(order) && panels < settings.panel_count) panels *= 2;
    std::complex<double> estimate = trapezoid_sideband(kb, order, panels);
    while (panels < settings.panel_count) {
        const std::complex<double> refined = 0.5 * (estimate + midpoint_mean(kb, order, panels));
        panels *= 2;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (change <= settings.tolerance) return estimate;
    }
    throw AccuracyError("sideband coefficient for m = " + std::to_string(order) +
                        " did not converge within " + std::to_string(settings.panel_count) +
                        " panels");
}

double conservation_bisect(double omega0, double mass) {
    if (!(std::isfinite(omega0) && omega0 > 0.0) || !(std::isfinite(mass) && mass > 0.0)) {
        throw DomainError("omega0 and mass must be positive");
    }
    // f(Omega) / hbar^2 = K Omega - (omega0 + Omega)^2 with K = 2 m c^2 / hbar.
    const double k = 2.0 * mass * codata2018.c * codata2018.c / codata2018.hbar;
    auto f = [&](double omega) {
        const double total = omega0 + omega;
        return k * omega - total * total;
    };
    double lo = 0.0;
    double hi = omega0;
    if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
        throw RegimeError("conservation laws have no root in (0, omega0)");
    }
    for (int step = 0; step < max_bisection_steps && hi - lo > 1e-14 * hi; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double spectrum_weight_check(double kb, int max_order, const QuadratureSettings& settings) {
    check_kb(kb);
    if (max_order < 0 || max_order > bessel_max_order) {
        throw DomainError("max_order must lie in [0, 200]");
    }
    double worst = 0.0;
    for (int m = -max_order; m <= max_order; ++m) {
        const double analytic = bessel_j(m, kb);
        const double numeric = fourier_sideband_coefficient(kb, m, settings).real();
        worst = std::max(worst, std::abs(analytic * analytic - numeric * numeric));
    }
    return worst;
}

}  // namespace recoil::oracle
