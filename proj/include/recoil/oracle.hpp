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

#include <complex>

namespace recoil::oracle {

/// Periodic trapezoid settings. panel_count is the refinement budget and must
/// be a power of two.
struct QuadratureSettings {
    int panel_count = 256;
    double tolerance = 1e-13;
};

/// Fixed-size trapezoid estimate of (1/2pi) int_0^2pi exp(i kb sin t - i m t) dt.
std::complex<double> trapezoid_sideband(double kb, int order, int panels);

/// m-th Fourier coefficient of exp(i kb sin t), refined by panel doubling until
/// successive estimates agree to settings.tolerance. AccuracyError when the
/// budget is exhausted first. The real part is J_m(kb) and the imaginary part vanishes.
std::complex<double> fourier_sideband_coefficient(double kb, int order,
                                                  const QuadratureSettings& settings = {});

/// Root of 2 m c^2 hbar Omega - hbar^2 (omega0 + Omega)^2 on (0, omega0) by
/// bisection to relative width 1e-14. RegimeError when the bracket has no sign change.
double conservation_bisect(double omega0, double mass);

/// max over |m| <= max_order of |bessel_j(m, kb)^2 - Re(c_m)^2|.
double spectrum_weight_check(double kb, int max_order, const QuadratureSettings& settings = {});

}  // namespace recoil::oracle
