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

#include "recoil/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "recoil/errors.hpp"
#include "recoil/kinematics.hpp"
#include "recoil/oracle.hpp"
#include "recoil/quantities.hpp"
#include "recoil/relaxation.hpp"
#include "recoil/spectrum.hpp"

namespace recoil::cli {

using nlohmann::ordered_json;

namespace {

class UsageError : public Error {
  public:
    using Error::Error;
};

constexpr double verify_weight_tolerance = 1e-9;
constexpr double verify_omega_tolerance = 1e-12;

struct SourceOptions {
    std::optional<std::string> table;
    std::optional<std::string> name;
    std::optional<double> energy_kev;
    std::optional<double> mass_amu;
};

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    cmd->add_option("--table", src.table, "Isotope table (default: $RECOIL_LINES_TABLE)");
    auto* name = cmd->add_option("--name", src.name, "Isotope name from the table");
    auto* energy = cmd->add_option("--energy-kev", src.energy_kev, "Gamma transition energy, keV");
    auto* mass = cmd->add_option("--mass-amu", src.mass_amu, "Nuclear mass, amu");
    name->excludes(energy)->excludes(mass);
}

std::optional<std::string> table_path(const SourceOptions& src, const Environment& env) {
    if (src.table) return src.table;
    return env.table_path;
}

const Isotope& find_isotope(const std::vector<Isotope>& table, const std::string& name) {
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const Isotope& iso) { return iso.name == name; });
    if (it == table.end()) throw UsageError("unknown isotope '" + name + "'");
    return *it;
}

Isotope resolve_isotope(const SourceOptions& src, const Environment& env) {
    if (src.name) {
        auto path = table_path(src, env);
        if (!path) throw UsageError("--name needs --table or RECOIL_LINES_TABLE");
        return find_isotope(load_isotope_table_file(*path), *src.name);
    }
    if (!src.energy_kev || !src.mass_amu) {
        throw UsageError("give --name, or both --energy-kev and --mass-amu");
    }
    Isotope iso{"custom", *src.mass_amu, *src.energy_kev, std::nullopt};
    if (!(iso.mass_amu > 0.0) || !(iso.gamma_energy_kev > 0.0)) {
        throw DomainError("energy and mass must be positive");
    }
    return iso;
}

ordered_json isotope_json(const Isotope& iso) {
    ordered_json j;
    j["name"] = iso.name;
    j["mass_amu"] = sig9(iso.mass_amu);
    j["gamma_energy_kev"] = sig9(iso.gamma_energy_kev);
    j["excited_lifetime_s"] =
        iso.excited_lifetime_s ? ordered_json(sig9(*iso.excited_lifetime_s)) : ordered_json();
    return j;
}

void echo_source(OutputRecord& rec, const Isotope& iso) {
    rec.inputs["isotope"] = iso.name;
    rec.inputs["mass_amu"] = sig9(iso.mass_amu);
    rec.inputs["gamma_energy_kev"] = sig9(iso.gamma_energy_kev);
}

void emit(const OutputRecord& rec, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << rec.to_json().dump(2) << '\n';
    } else {
        write_key_value_csv(rec, out);
    }
}

std::string csv_value(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_string()) return csv_field(v.get<std::string>());
    return csv_field(v.dump());
}

void flatten(const std::string& section, const std::string& prefix, const ordered_json& v,
             std::ostream& out) {
    if (v.is_object()) {
        for (const auto& [key, item] : v.items()) {
            flatten(section, prefix.empty() ? key : prefix + "." + key, item, out);
        }
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(section, prefix + "." + std::to_string(i), v[i], out);
        }
    } else {
        out << section << ',' << csv_field(prefix) << ',' << csv_value(v) << '\n';
    }
}

// ---------------------------------------------------------------- commands

struct IsotopesCmd {
    std::string format = "csv";
    std::optional<std::string> table;
    std::optional<std::string> name;

    int run(std::ostream& out, const Environment& env) const {
        auto path = table ? table : env.table_path;
        if (!path) throw UsageError("isotopes needs --table or RECOIL_LINES_TABLE");
        auto all = load_isotope_table_file(*path);
        std::vector<Isotope> shown;
        if (name) {
            shown.push_back(find_isotope(all, *name));
        } else {
            shown = std::move(all);
        }
        if (format == "json") {
            OutputRecord rec;
            rec.command = "isotopes";
            rec.inputs["table"] = *path;
            rec.inputs["name"] = name ? ordered_json(*name) : ordered_json();
            rec.results["isotopes"] = ordered_json::array();
            for (const auto& iso : shown) rec.results["isotopes"].push_back(isotope_json(iso));
            emit(rec, format, out);
            return exit_ok;
        }
        out << "name,mass_amu,gamma_energy_kev,excited_lifetime_s\n";
        for (const auto& iso : shown) {
            out << csv_field(iso.name) << ',' << format_number(iso.mass_amu) << ','
                << format_number(iso.gamma_energy_kev) << ','
                << (iso.excited_lifetime_s ? format_number(*iso.excited_lifetime_s) : "") << '\n';
        }
        return exit_ok;
    }
};

struct RecoilCmd {
    std::string format = "csv";
    SourceOptions src;

    int run(std::ostream& out, const Environment& env) const {
        const Isotope iso = resolve_isotope(src, env);
        const RecoilSolution s = solve_recoil(iso);
        OutputRecord rec;
        rec.command = "recoil";
        echo_source(rec, iso);
        auto& r = rec.results;
        r["omega0_rad_s"] = sig9(s.omega0);
        r["recoil_energy_ev"] = sig9(s.recoil_energy / codata2018.ev);
        r["recoil_energy_j"] = sig9(s.recoil_energy);
        r["trap_omega_rad_s"] = sig9(s.trap_omega);
        r["trap_omega_exact_rad_s"] = sig9(s.trap_omega_exact);
        r["recoil_velocity_m_s"] = sig9(s.recoil_velocity);
        r["amplitude_b_m"] = sig9(s.amplitude_b);
        r["lamb_dicke"] = sig9(s.lamb_dicke);
        r["excursion_m"] = sig9(s.excursion);
        r["excursion_cm"] = sig9(s.excursion * 100.0);
        r["validity_ratio"] = sig9(s.validity_ratio);
        emit(rec, format, out);
        return exit_ok;
    }
};

struct SpectrumCmd {
    std::string format = "csv";
    SourceOptions src;
    std::string branch = "emission";
    int n = 0;
    std::optional<int> max_order;
    double epsilon = 1e-12;
    std::optional<double> kb;
    double bs_ratio = 0.0;
    double omega_s = 0.0;
    std::vector<std::string> phonons;

    static PhononMode parse_phonon(const std::string& text, double b) {
        auto colon = text.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--phonon expects RATIO:OMEGA, got '" + text + "'");
        }
        try {
            std::size_t used_r = 0;
            std::size_t used_w = 0;
            const std::string ratio_text = text.substr(0, colon);
            const std::string omega_text = text.substr(colon + 1);
            const double ratio = std::stod(ratio_text, &used_r);
            const double omega = std::stod(omega_text, &used_w);
            if (used_r != ratio_text.size() || used_w != omega_text.size()) throw std::invalid_argument("");
            return {ratio * b, omega};
        } catch (const std::logic_error&) {
            throw UsageError("--phonon expects RATIO:OMEGA, got '" + text + "'");
        }
    }

    int run(std::ostream& out, const Environment& env) const {
        const Isotope iso = resolve_isotope(src, env);
        const RecoilSolution s = solve_recoil(iso);
        const Branch br = parse_branch(branch);

        const auto well = debye_waller_from_well_oscillation(bs_ratio * s.amplitude_b, omega_s,
                                                             s.amplitude_b, s.trap_omega);
        std::vector<PhononMode> modes;
        for (const auto& p : phonons) modes.push_back(parse_phonon(p, s.amplitude_b));
        const auto bath = debye_waller_from_phonons(modes, s.amplitude_b, s.trap_omega);

        SpectrumConfig cfg;
        cfg.kb = kb ? *kb : s.lamb_dicke;
        cfg.max_order = max_order;
        cfg.epsilon = epsilon;
        cfg.photon_occupation = n;
        cfg.suppression_w = well.w + bath.w;
        const LineSpectrum spec = line_spectrum(s.omega0, s.trap_omega, cfg, br);

        if (format == "csv") {
            out << "order,frequency_rad_s,offset_in_Omega,weight,branch\n";
            for (const auto& line : spec.lines) {
                out << line.order << ',' << format_number(line.frequency) << ',' << line.offset
                    << ',' << format_number(line.weight) << ',' << to_string(line.branch) << '\n';
            }
            out << "summary," << format_number(spec.normalization_deficit) << ','
                << spec.truncation_order << ',' << format_number(spec.suppression_factor) << ','
                << to_string(br) << '\n';
            return exit_ok;
        }

        OutputRecord rec;
        rec.command = "spectrum";
        echo_source(rec, iso);
        rec.inputs["branch"] = std::string(to_string(br));
        rec.inputs["n"] = n;
        rec.inputs["max_order"] = max_order ? ordered_json(*max_order) : ordered_json();
        rec.inputs["epsilon"] = sig9(epsilon);
        rec.inputs["kb"] = kb ? ordered_json(sig9(*kb)) : ordered_json();
        rec.inputs["bs_ratio"] = sig9(bs_ratio);
        rec.inputs["omega_s_rad_s"] = sig9(omega_s);
        rec.inputs["phonons"] = phonons;

        auto& r = rec.results;
        r["omega0_rad_s"] = sig9(s.omega0);
        r["trap_omega_rad_s"] = sig9(s.trap_omega);
        r["kb"] = sig9(cfg.kb);
        r["suppression_w"] = sig9(cfg.suppression_w);
        r["suppression_factor"] = sig9(spec.suppression_factor);
        r["well_frequency_condition"] = well.frequency_condition;
        r["well_amplitude_condition"] = well.amplitude_condition;
        r["phonon_frequency_condition"] = bath.frequency_condition;
        r["phonon_amplitude_condition"] = bath.amplitude_condition;
        r["truncation_order"] = spec.truncation_order;
        r["normalization_deficit"] = sig9(spec.normalization_deficit);
        r["lines"] = ordered_json::array();
        for (const auto& line : spec.lines) {
            ordered_json l;
            l["order"] = line.order;
            l["frequency_rad_s"] = sig9(line.frequency);
            l["offset_in_Omega"] = line.offset;
            l["weight"] = sig9(line.weight);
            l["branch"] = std::string(to_string(line.branch));
            r["lines"].push_back(std::move(l));
        }
        emit(rec, format, out);
        return exit_ok;
    }
};

struct RelaxationCmd {
    std::string format = "csv";
    SourceOptions src;
    std::optional<double> density;
    std::optional<double> sound_speed;
    std::optional<double> lattice_spacing;
    std::optional<std::string> materials;
    std::optional<std::string> material;
    std::optional<double> lifetime;
    int dim = 3;
    double margin = default_hierarchy_margin;

    int run(std::ostream& out, const Environment& env) const {
        const Isotope iso = resolve_isotope(src, env);

        std::optional<double> rho = density;
        std::optional<double> vs = sound_speed;
        std::optional<double> spacing = lattice_spacing;
        if (material) {
            if (!materials) throw UsageError("--material needs --materials");
            const auto table = load_material_table_file(*materials);
            auto it = std::find_if(table.begin(), table.end(),
                                   [&](const Material& m) { return m.name == *material; });
            if (it == table.end()) throw UsageError("unknown material '" + *material + "'");
            if (!rho) rho = it->medium.mass_density;
            if (!vs) vs = it->medium.sound_speed;
            if (!spacing) spacing = it->lattice_spacing_m;
        }
        if (!rho || !vs) throw UsageError("relaxation needs --density and --sound-speed");
        if (dim == 1 && !spacing) throw UsageError("--dim 1 needs --lattice-spacing");
        if (!(margin > 0.0)) throw UsageError("--margin must be positive");

        const RecoilSolution s = solve_recoil(iso);
        RelaxationInputs in;
        in.medium = Medium{*rho, *vs};
        if (!(in.medium.mass_density > 0.0) || !(in.medium.sound_speed > 0.0)) {
            throw DomainError("density and sound speed must be positive");
        }
        in.lattice_spacing = spacing;
        in.excited_lifetime = lifetime ? lifetime : iso.excited_lifetime_s;
        in.margin = margin;
        const RelaxationReport rep = relaxation_report(s, in);
        const HierarchyVerdict& chosen = dim == 1 ? rep.hierarchy_1d : rep.hierarchy_3d;

        OutputRecord rec;
        rec.command = "relaxation";
        echo_source(rec, iso);
        rec.inputs["density_kg_m3"] = sig9(*rho);
        rec.inputs["sound_speed_m_s"] = sig9(*vs);
        rec.inputs["lattice_spacing_m"] = spacing ? ordered_json(sig9(*spacing)) : ordered_json();
        rec.inputs["excited_lifetime_s"] =
            in.excited_lifetime ? ordered_json(sig9(*in.excited_lifetime)) : ordered_json();
        rec.inputs["dim"] = dim;
        rec.inputs["margin"] = sig9(margin);

        auto& r = rec.results;
        r["trap_omega_rad_s"] = sig9(s.trap_omega);
        r["sound_wavelength_m"] = sig9(rep.sound_wavelength);
        r["period_s"] = sig9(rep.period);
        r["velocity_ratio"] = sig9(rep.feasibility.velocity_ratio);
        r["momentum_ratio"] = sig9(rep.feasibility.momentum_ratio);
        r["ks_b"] = sig9(rep.feasibility.ks_b);
        r["sound_field_amplitude"] = sig9(rep.sound_field_amplitude);
        r["tau_s"] = sig9(dim == 1 ? rep.tau_1d : rep.tau_3d);
        r["tau_3d_s"] = sig9(rep.tau_3d);
        r["tau_1d_s"] = sig9(rep.tau_1d);
        r["linear_density_kg_m"] = sig9(rep.linear_density);
        r["mass_ratio_1d"] = sig9(rep.mass_ratio_1d);
        r["emission_rate_ratio_per_s"] = sig9(rep.emission_rate_ratio);
        r["energy_balance_time_s"] = sig9(rep.energy_balance_time);
        r["consistency_ratio"] = sig9(rep.consistency_ratio);
        r["hierarchy_ok_period"] = chosen.ok_period;
        r["hierarchy_ok_lifetime"] =
            chosen.ok_lifetime ? ordered_json(*chosen.ok_lifetime) : ordered_json();

        rec.notes.push_back("consistency ratio (hbar*Omega/I) / tau_1d = " +
                            format_number(rep.consistency_ratio));
        rec.notes.push_back(
            "sound_field_amplitude is the density amplitude m*b*Omega^2/(8*v_s^2) read per unit "
            "cross-section of the 1D perturbation");
        if (!rep.linear_density_from_lattice) {
            rec.notes.push_back(
                "no lattice spacing given: 1D quantities assume one particle per sound wavelength");
        }
        emit(rec, format, out);
        return exit_ok;
    }
};

struct VerifyCmd {
    std::string format = "csv";
    double kb = 2.0;
    int orders = 8;
    int panels = 256;
    double energy_kev = 14.4;
    double mass_amu = 56.9354;

    int run(std::ostream& out, std::ostream& err) const {
        if (orders < 0) throw UsageError("--orders must be non-negative");
        if (panels < 1 || (panels & (panels - 1)) != 0) {
            throw UsageError("--panels must be a power of two");
        }
        OutputRecord rec;
        rec.command = "verify";
        rec.inputs["kb"] = sig9(kb);
        rec.inputs["orders"] = orders;
        rec.inputs["panels"] = panels;
        rec.inputs["energy_kev"] = sig9(energy_kev);
        rec.inputs["mass_amu"] = sig9(mass_amu);

        const double omega0 = energy_kev_to_omega(energy_kev);
        const double mass = mass_amu_to_kg(mass_amu);
        const double exact = trap_frequency_exact(omega0, mass);
        const double bisect = oracle::conservation_bisect(omega0, mass);
        const double omega_dev = std::abs(exact - bisect) / exact;

        oracle::QuadratureSettings settings;
        settings.panel_count = std::max(panels, 4);
        double weight_dev = 0.0;
        try {
            if (panels < 4) throw AccuracyError("panel budget below the first refinement level");
            weight_dev = oracle::spectrum_weight_check(kb, orders, settings);
        } catch (const AccuracyError& e) {
            err << "verify: accuracy error: " << e.what() << '\n';
            return exit_verification;
        }

        const bool weights_ok = weight_dev <= verify_weight_tolerance;
        const bool omega_ok = omega_dev <= verify_omega_tolerance;
        auto& r = rec.results;
        r["max_weight_deviation"] = sig9(weight_dev);
        r["weight_tolerance"] = sig9(verify_weight_tolerance);
        r["weights_pass"] = weights_ok;
        r["trap_omega_exact_rad_s"] = sig9(exact);
        r["trap_omega_bisect_rad_s"] = sig9(bisect);
        r["trap_omega_relative_deviation"] = sig9(omega_dev);
        r["omega_tolerance"] = sig9(verify_omega_tolerance);
        r["omega_pass"] = omega_ok;
        r["pass"] = weights_ok && omega_ok;
        emit(rec, format, out);
        return weights_ok && omega_ok ? exit_ok : exit_verification;
    }
};

}  // namespace

double sig9(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", x);
    return buf;
}

ordered_json OutputRecord::to_json() const {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["notes"] = notes;
    return j;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void write_key_value_csv(const OutputRecord& record, std::ostream& out) {
    out << "section,key,value\n";
    out << "meta,schema_version," << schema_version << '\n';
    out << "meta,command," << csv_field(record.command) << '\n';
    flatten("input", "", record.inputs, out);
    flatten("result", "", record.results, out);
    for (std::size_t i = 0; i < record.notes.size(); ++i) {
        out << "note," << i << ',' << csv_field(record.notes[i]) << '\n';
    }
}

Environment Environment::from_process() {
    Environment env;
    if (const char* table = std::getenv("RECOIL_LINES_TABLE"); table && *table) {
        env.table_path = table;
    }
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
    CLI::App app{"Recoil-modified line spectra of an oscillator trapped in a potential well",
                 "recoil-lines"};
    app.require_subcommand(1);

    IsotopesCmd isotopes;
    auto* c_iso = app.add_subcommand("isotopes", "List isotopes from a table");
    add_format_option(c_iso, isotopes.format);
    c_iso->add_option("--table", isotopes.table, "Isotope table (default: $RECOIL_LINES_TABLE)");
    c_iso->add_option("--name", isotopes.name, "Show only this isotope");

    RecoilCmd recoil;
    auto* c_rec = app.add_subcommand("recoil", "Recoil kinematics and Lamb-Dicke parameter");
    add_format_option(c_rec, recoil.format);
    add_source_options(c_rec, recoil.src);

    SpectrumCmd spectrum;
    auto* c_spec = app.add_subcommand("spectrum", "Sideband line spectrum");
    add_format_option(c_spec, spectrum.format);
    add_source_options(c_spec, spectrum.src);
    c_spec->add_option("--branch", spectrum.branch, "emission or absorption")
        ->check(CLI::IsMember({"emission", "absorption"}))
        ->capture_default_str();
    c_spec->add_option("--n", spectrum.n, "Photon occupation number")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    auto* max_order = c_spec->add_option("--max-order", spectrum.max_order, "Truncation order M")
                          ->check(CLI::Range(0, 200));
    c_spec->add_option("--epsilon", spectrum.epsilon, "Normalization deficit for auto truncation")
        ->capture_default_str()
        ->excludes(max_order);
    c_spec->add_option("--kb", spectrum.kb, "Override the Lamb-Dicke parameter");
    c_spec->add_option("--bs-ratio", spectrum.bs_ratio, "Well oscillation amplitude b_s / b")
        ->capture_default_str();
    c_spec->add_option("--omega-s", spectrum.omega_s, "Well oscillation frequency, rad/s")
        ->capture_default_str();
    c_spec->add_option("--phonon", spectrum.phonons,
                       "Phonon mode RATIO:OMEGA (amplitude b_i / b, frequency rad/s); repeatable");

    RelaxationCmd relax;
    auto* c_rel = app.add_subcommand("relaxation", "Phonon relaxation of the trap motion");
    add_format_option(c_rel, relax.format);
    add_source_options(c_rel, relax.src);
    c_rel->add_option("--density", relax.density, "Mass density rho0, kg/m^3");
    c_rel->add_option("--sound-speed", relax.sound_speed, "Sound speed v_s, m/s");
    c_rel->add_option("--lattice-spacing", relax.lattice_spacing, "Lattice spacing a, m");
    c_rel->add_option("--materials", relax.materials, "Materials table");
    c_rel->add_option("--material", relax.material, "Material name from --materials");
    c_rel->add_option("--lifetime", relax.lifetime, "Excited-state lifetime, s");
    c_rel->add_option("--dim", relax.dim, "1 or 3")
        ->check(CLI::IsMember({1, 3}))
        ->capture_default_str();
    c_rel->add_option("--margin", relax.margin, "Factor used for 'much greater than'")
        ->capture_default_str();

    VerifyCmd verify;
    auto* c_ver = app.add_subcommand("verify", "Cross-check against the numerical oracles");
    add_format_option(c_ver, verify.format);
    c_ver->add_option("--kb", verify.kb, "Lamb-Dicke parameter")->capture_default_str();
    c_ver->add_option("--orders", verify.orders, "Check |m| <= orders")->capture_default_str();
    c_ver->add_option("--panels", verify.panels, "Quadrature panel budget (power of two)")
        ->capture_default_str();
    c_ver->add_option("--energy-kev", verify.energy_kev, "Energy for the trap-frequency check")
        ->capture_default_str();
    c_ver->add_option("--mass-amu", verify.mass_amu, "Mass for the trap-frequency check")
        ->capture_default_str();

    std::vector<const char*> argv{"recoil-lines"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (c_iso->parsed()) return isotopes.run(out, env);
        if (c_rec->parsed()) return recoil.run(out, env);
        if (c_spec->parsed()) return spectrum.run(out, env);
        if (c_rel->parsed()) return relax.run(out, env);
        if (c_ver->parsed()) return verify.run(out, err);
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << '\n';
        return exit_verification;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_physics;
    } catch (const RegimeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_physics;
    } catch (const SingularityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_physics;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace recoil::cli
