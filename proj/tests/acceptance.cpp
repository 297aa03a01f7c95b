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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recoil/cli.hpp"
#include "recoil/kinematics.hpp"
#include "recoil/oracle.hpp"
#include "recoil/relaxation.hpp"
#include "recoil/spectrum.hpp"

using namespace recoil;

namespace {

constexpr double pi = std::numbers::pi;
const double c = codata2018.c;
const double hbar = codata2018.hbar;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, d);
    return buf;
}

double mass_for_ratio(double omega0, double ratio) { return hbar * omega0 / (2.0 * ratio * c * c); }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

nlohmann::json run_json(std::vector<std::string> args, int& code) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream out, err;
    code = cli::run(args, out, err, cli::Environment{});
    if (code != 0) return {};
    return nlohmann::json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome lamb_dicke_closure() {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double omega0 = log_uniform(rng, 1e12, 1e21);
        const double mass = mass_for_ratio(omega0, log_uniform(rng, 1e-12, 5e-2));
        worst = std::max(worst, std::abs(solve_recoil(omega0, mass).lamb_dicke - 2.0));
    }
    return {worst <= 1e-9, fmt("max |kb - 2| = %.3e over 100 pairs (tol 1e-9)", worst)};
}

Outcome excursions() {
    int code_fe = 0;
    int code_sn = 0;
    const auto fe = run_json({"recoil", "--energy-kev", "14.4", "--mass-amu", "56.9354"}, code_fe);
    const auto sn = run_json({"recoil", "--energy-kev", "23.8", "--mass-amu", "118.9033"}, code_sn);
    if (code_fe != 0 || code_sn != 0) return {false, "recoil command failed"};
    const double fe_cm = fe["results"]["excursion_cm"];
    const double sn_cm = sn["results"]["excursion_cm"];
    const bool ok = fe_cm >= 0.54e-8 && fe_cm <= 0.56e-8 && sn_cm >= 0.32e-8 && sn_cm <= 0.34e-8;
    return {ok, fmt("57Fe %.4e cm in [0.54e-8, 0.56e-8]; 119Sn %.4e cm in [0.32e-8, 0.34e-8]",
                    fe_cm, sn_cm)};
}

Outcome central_dominance() {
    const double ratio = central_to_sideband_ratio(2.0);
    return {ratio >= 6.5 && ratio <= 6.8,
            fmt("J1^2/J0^2 at kb = 2 is %.6f in [6.5, 6.8] (about 7x, not 10x)", ratio)};
}

Outcome relaxation_times() {
    const auto fe = solve_recoil(Isotope{"57Fe", 56.9354, 14.4, std::nullopt});
    const auto sn = solve_recoil(Isotope{"119Sn", 118.9033, 23.8, std::nullopt});
    const double tau_fe = relaxation_time_3d(fe.mass, Medium{7874.0, 5000.0}, fe.omega0, fe.trap_omega);
    const double tau_sn = relaxation_time_3d(sn.mass, Medium{7310.0, 2500.0}, sn.omega0, sn.trap_omega);
    const bool fe_ok = tau_fe >= 0.03 && tau_fe <= 0.3;
    const bool sn_ok = tau_sn >= 0.003 && tau_sn <= 0.03;
    return {fe_ok && sn_ok,
            fmt("57Fe tau_3d = %.4e s in [0.03, 0.3]: ", tau_fe) + (fe_ok ? "yes" : "no") +
                fmt("; 119Sn tau_3d = %.4e s in [0.003, 0.03]: ", tau_sn) + (sn_ok ? "yes" : "no")};
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst_weight = 0.0;
    for (double kb : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        worst_weight = std::max(worst_weight, oracle::spectrum_weight_check(kb, 10));
    }
    double worst_omega = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double omega0 = std::pow(10.0, 12.0 + 9.0 * i / 39.0);
        for (int j = 0; j < 25; ++j) {
            const double mass = mass_for_ratio(omega0, std::pow(10.0, -12.0 + 10.7 * j / 24.0));
            const double exact = trap_frequency_exact(omega0, mass);
            const double bisect = oracle::conservation_bisect(omega0, mass);
            worst_omega = std::max(worst_omega, std::abs(exact - bisect) / exact);
        }
    }
    const double elapsed = seconds_since(start);
    return {worst_weight <= 1e-9 && worst_omega <= 1e-12 && elapsed < 10.0,
            fmt("weight dev %.3e (tol 1e-9); Omega rel dev %.3e over 1000 pairs (tol 1e-12); %.2f s",
                worst_weight, worst_omega, elapsed)};
}

Outcome property_suite() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> kb_dist(0.0, 10.0);
    std::uniform_real_distribution<double> w_dist(0.0, 4.0);
    std::uniform_int_distribution<int> n_dist(0, 20);
    const double omega0 = 2.1877451262856952e19;
    const double trap = 2.970070346310947e12;
    int failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
        SpectrumConfig cfg;
        cfg.kb = kb_dist(rng);
        cfg.epsilon = std::pow(10.0, -3.0 - trial % 10);
        cfg.photon_occupation = n_dist(rng);
        const auto emit = line_spectrum(omega0, trap, cfg, Branch::emission);
        if (emit.normalization_deficit > cfg.epsilon) ++failures;

        auto next = cfg;
        next.photon_occupation += 1;
        const auto absorb = line_spectrum(omega0, trap, next, Branch::absorption);
        const std::size_t n = emit.lines.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& e = emit.lines[i];
            const auto& a = absorb.lines[n - 1 - i];
            if (a.offset != -e.offset || a.weight != e.weight) ++failures;
        }

        auto bare = cfg;
        bare.photon_occupation = 0;
        const auto unit = line_spectrum(omega0, trap, bare, Branch::emission);
        const auto unit_abs = line_spectrum(omega0, trap, cfg, Branch::absorption);
        for (std::size_t i = 0; i < n; ++i) {
            if (emit.lines[i].weight != unit.lines[i].weight * (cfg.photon_occupation + 1)) ++failures;
            if (unit_abs.lines[i].weight != unit.lines[i].weight * cfg.photon_occupation) ++failures;
        }

        auto damped_cfg = bare;
        damped_cfg.suppression_w = w_dist(rng);
        const auto damped = line_spectrum(omega0, trap, damped_cfg, Branch::emission);
        double total = 0.0;
        double total_damped = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += unit.lines[i].weight;
            total_damped += damped.lines[i].weight;
        }
        const double factor = std::exp(-damped_cfg.suppression_w);
        if (damped.suppression_factor != factor ||
            std::abs(total_damped - total * factor) > 1e-14 * total * factor) {
            ++failures;
        }
    }
    const double elapsed = seconds_since(start);
    return {failures == 0 && elapsed < 5.0,
            fmt("%.0f violations over 300 randomized spectra; %.2f s", double(failures), elapsed)};
}

Outcome approximation_bound() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double omega0 = std::pow(10.0, 12.0 + 9.0 * i / 49.0);
        for (int j = 0; j < 50; ++j) {
            const double ratio = std::pow(10.0, -12.0 + 10.0 * j / 49.0);
            const double mass = mass_for_ratio(omega0, ratio);
            const double exact = trap_frequency_exact(omega0, mass);
            const double approx = trap_frequency_approx(omega0, mass);
            worst = std::max(worst, std::abs(exact - approx) / exact / (4.0 * validity_ratio(omega0, mass)));
        }
    }
    return {worst <= 1.0, fmt("max |dOmega|/Omega / (4 hbar w0/2mc^2) = %.4f (must be <= 1)", worst)};
}

Outcome discrepancy_surfaced() {
    int code = 0;
    const auto j = run_json({"relaxation", "--energy-kev", "14.4", "--mass-amu", "56.9354",
                             "--density", "7874", "--sound-speed", "5000"},
                            code);
    if (code != 0) return {false, "relaxation command failed"};
    const double ratio = j["results"]["consistency_ratio"];
    const auto fe = solve_recoil(Isotope{"57Fe", 56.9354, 14.4, std::nullopt});
    RelaxationInputs in;
    in.medium = Medium{7874.0, 5000.0};
    in.lattice_spacing = 2.87e-10;
    const double exact_ratio = relaxation_report(fe, in).consistency_ratio;
    bool note = false;
    for (const auto& n : j["notes"]) note = note || n.get<std::string>() == cli::relaxation_note;
    const bool ok = std::abs(exact_ratio - 2.0 * pi) <= 1e-9 && std::abs(ratio - 2.0 * pi) <= 1e-8 && note;
    return {ok, fmt("consistency ratio %.12f vs 2pi (|diff| = %.2e, tol 1e-9); note present: ",
                    exact_ratio, std::abs(exact_ratio - 2.0 * pi)) +
                    (note ? "yes" : "no")};
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "Lamb-Dicke closure", lamb_dicke_closure},
        {"AC2", "excursions", excursions},
        {"AC3", "central-line dominance", central_dominance},
        {"AC4", "relaxation times", relaxation_times},
        {"AC5", "oracle equivalence", oracle_equivalence},
        {"AC6", "normalization and scaling properties", property_suite},
        {"AC7", "approximation-error bound", approximation_bound},
        {"AC8", "rate/time discrepancy surfaced", discrepancy_surfaced},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
