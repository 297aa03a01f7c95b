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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "recoil/errors.hpp"
#include "recoil/kinematics.hpp"
#include "recoil/oracle.hpp"

using namespace recoil;
using recoil::test::rel_diff;

namespace {

const double c = codata2018.c;
const double hbar = codata2018.hbar;

const Isotope fe57{"57Fe", 56.9354, 14.4, std::nullopt};
const Isotope sn119{"119Sn", 118.9033, 23.8, std::nullopt};

double fe_omega0() { return energy_kev_to_omega(14.4); }
double fe_mass() { return mass_amu_to_kg(56.9354); }

// Mass that puts omega0 at the requested validity ratio.
double mass_for_ratio(double omega0, double ratio) { return hbar * omega0 / (2.0 * ratio * c * c); }

}  // namespace

TEST_CASE("recoil_energy") {
    const double er = recoil_energy(fe_omega0(), fe_mass());
    CHECK(rel_diff(er / codata2018.ev, 1.9549358137e-3) < 1e-8);
    CHECK(rel_diff(recoil_energy(2.0 * fe_omega0(), fe_mass()), 4.0 * er) < 1e-14);
    CHECK(recoil_energy(1e-6, fe_mass()) < 1e-60);
    CHECK_THROWS_AS(recoil_energy(0.0, fe_mass()), DomainError);
    CHECK_THROWS_AS(recoil_energy(fe_omega0(), -1.0), DomainError);
}

TEST_CASE("trap_frequency_approx") {
    const double omega = trap_frequency_approx(fe_omega0(), fe_mass());
    CHECK(rel_diff(omega, 2.9700703463e12) < 1e-8);
    CHECK(rel_diff(omega, recoil_energy(fe_omega0(), fe_mass()) / hbar) < 1e-14);
    CHECK(rel_diff(trap_frequency_approx(energy_kev_to_omega(23.8), mass_amu_to_kg(118.9033)),
                   3.8849383712e12) < 1e-8);
}

TEST_CASE("trap_frequency_exact") {
    const double w0 = fe_omega0();
    const double m = fe_mass();
    const double exact = trap_frequency_exact(w0, m);
    // Quadratic root evaluated at 40 digits for the same inputs.
    CHECK(rel_diff(exact, 2.9700711527e12) < 1e-8);
    CHECK(rel_diff(exact, recoil::test::bisect_trap_frequency(w0, m, c, hbar)) < 1e-12);
    CHECK(rel_diff(exact, trap_frequency_approx(w0, m)) <= 4.0 * validity_ratio(w0, m));

    SUBCASE("ratio 0.05 returns the smaller of two distinct roots") {
        const double mass = mass_for_ratio(w0, 0.05);
        const double small = trap_frequency_exact(w0, mass);
        const double large = w0 * w0 / small;
        CHECK(large > 10.0 * small);
        CHECK(rel_diff(small, recoil::test::bisect_trap_frequency(w0, mass, c, hbar)) < 1e-12);
    }
    SUBCASE("heavy limit approaches the approximation") {
        double prev = 1.0;
        for (double scale : {1.0, 1e3, 1e6, 1e9}) {
            const double dev = std::abs(trap_frequency_exact(w0, m * scale) /
                                            trap_frequency_approx(w0, m * scale) - 1.0);
            CHECK(dev <= prev);
            prev = dev;
        }
        CHECK(prev < 1e-15);
    }
    SUBCASE("regime guard") {
        CHECK_THROWS_AS(trap_frequency_exact(w0, mass_for_ratio(w0, 0.1)), RegimeError);
        CHECK_THROWS_AS(trap_frequency_exact(w0, mass_for_ratio(w0, 0.5)), RegimeError);
        CHECK_NOTHROW(trap_frequency_exact(w0, mass_for_ratio(w0, 0.099)));
    }
}

TEST_CASE("recoil_velocity") {
    const double w0 = fe_omega0();
    const double m = fe_mass();
    const double v = recoil_velocity(w0, m);
    CHECK(rel_diff(v, 81.399307337) < 1e-8);
    CHECK(rel_diff(v, 2.0 * recoil_energy(w0, m) / (hbar * w0) * c) < 1e-12);
    CHECK(v < 5000.0);
}

TEST_CASE("trap_amplitude and excursion") {
    const double b = trap_amplitude(fe_omega0(), fe_mass());
    CHECK(rel_diff(b, 2.7406525047e-11) < 1e-8);
    CHECK(rel_diff(b, recoil_velocity(fe_omega0(), fe_mass()) /
                          trap_frequency_approx(fe_omega0(), fe_mass())) < 1e-14);
    CHECK(trap_amplitude(fe_omega0(), 1e-20) == b);
    const double excursion_cm = 2.0 * b * 100.0;
    CHECK(excursion_cm == doctest::Approx(0.55e-8).epsilon(0.01));
    const double sn_cm = 2.0 * trap_amplitude(energy_kev_to_omega(23.8), 1.0) * 100.0;
    CHECK(sn_cm == doctest::Approx(0.33e-8).epsilon(0.01));
}

TEST_CASE("lamb_dicke") {
    const double w0 = fe_omega0();
    CHECK(lamb_dicke(w0, 0.0) == 0.0);
    CHECK(rel_diff(lamb_dicke(w0, c / w0), 1.0) < 1e-15);
    CHECK_THROWS_AS(lamb_dicke(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(lamb_dicke(w0, -1.0), DomainError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const double omega0 = recoil::test::log_uniform(rng, 1e10, 1e22);
        const double mass = recoil::test::log_uniform(rng, 1e-30, 1e-20);
        CHECK(std::abs(lamb_dicke(omega0, trap_amplitude(omega0, mass)) - 2.0) < 1e-14);
    }
}

TEST_CASE("solve_recoil bundles every field") {
    const auto s = solve_recoil(fe57);
    CHECK(std::abs(s.lamb_dicke - 2.0) < 1e-14);
    CHECK(s.excursion == 2.0 * s.amplitude_b);
    CHECK(s.excursion * 100.0 == doctest::Approx(0.55e-8).epsilon(0.01));
    CHECK(rel_diff(s.trap_omega, 2.97e12) < 1e-3);
    CHECK(rel_diff(s.validity_ratio, 1.3575943e-7) < 1e-7);
    CHECK(rel_diff(s.lamb_dicke, s.omega0 * s.amplitude_b / c) < 1e-12);
    CHECK(rel_diff(s.recoil_energy, hbar * s.trap_omega) < 1e-14);

    const auto sn = solve_recoil(sn119);
    CHECK(std::abs(sn.lamb_dicke - 2.0) < 1e-14);
    CHECK(sn.excursion * 100.0 == doctest::Approx(0.33e-8).epsilon(0.01));

    CHECK_THROWS_AS(solve_recoil(Isotope{"bad", -1.0, 14.4, std::nullopt}), DataError);
    CHECK_THROWS_AS(solve_recoil(1e22, 1e-33), RegimeError);
}

TEST_CASE("energy-momentum closure with the exact root") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const double w0 = recoil::test::log_uniform(rng, 1e12, 1e21);
        const double m = mass_for_ratio(w0, recoil::test::log_uniform(rng, 1e-12, 5e-2));
        const double omega = trap_frequency_exact(w0, m);
        const double v = hbar * (w0 + omega) / (m * c);
        CHECK(rel_diff(m * v, hbar * (w0 + omega) / c) < 1e-10);
        CHECK(rel_diff(0.5 * m * v * v, hbar * omega) < 1e-10);
    }
}

TEST_CASE("approximation error bound over a regime grid") {
    for (int i = 0; i < 30; ++i) {
        const double w0 = std::pow(10.0, 12.0 + 9.0 * i / 29.0);
        for (int j = 0; j < 30; ++j) {
            const double ratio = std::pow(10.0, -12.0 + 10.0 * j / 29.0);
            const double m = mass_for_ratio(w0, ratio);
            const double exact = trap_frequency_exact(w0, m);
            const double approx = trap_frequency_approx(w0, m);
            CHECK(std::abs(exact - approx) / exact <= 4.0 * validity_ratio(w0, m));
        }
    }
}

TEST_CASE("scaling laws") {
    const double w0 = fe_omega0();
    const double m = fe_mass();
    const double s = 3.0;
    CHECK(rel_diff(recoil_energy(s * w0, m), s * s * recoil_energy(w0, m)) < 1e-14);
    CHECK(rel_diff(trap_frequency_approx(s * w0, m), s * s * trap_frequency_approx(w0, m)) < 1e-14);
    CHECK(rel_diff(trap_frequency_approx(w0, s * m), trap_frequency_approx(w0, m) / s) < 1e-14);
    CHECK(rel_diff(recoil_velocity(s * w0, m), s * recoil_velocity(w0, m)) < 1e-14);
    CHECK(rel_diff(recoil_velocity(w0, s * m), recoil_velocity(w0, m) / s) < 1e-14);
    CHECK(rel_diff(trap_amplitude(s * w0, m), trap_amplitude(w0, m) / s) < 1e-14);
}

TEST_CASE("exact solver agrees with the shipped bisection oracle") {
    CHECK(rel_diff(trap_frequency_exact(fe_omega0(), fe_mass()),
                   oracle::conservation_bisect(fe_omega0(), fe_mass())) < 1e-12);
}
