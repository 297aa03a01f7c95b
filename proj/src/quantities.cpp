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

#include "recoil/quantities.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "recoil/errors.hpp"

namespace recoil {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no, std::string_view what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError(line_no, "invalid " + std::string(what) + " '" + std::string(field) + "'");
    }
    return value;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line_no,
                                     std::string_view what) {
    if (field == "-") return std::nullopt;
    return parse_number(field, line_no, what);
}

struct Record {
    std::size_t line_no;
    std::vector<std::string_view> fields;
};

// Calls `emit` for every non-blank, non-comment line, after checking the field count.
template <typename Emit>
void for_each_record(std::istream& source, Emit&& emit) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        auto fields = split_fields(view);
        if (fields.empty()) continue;
        if (fields.size() < 3 || fields.size() > 4) {
            throw ParseError(line_no, "expected 3 or 4 fields, found " + std::to_string(fields.size()));
        }
        emit(Record{line_no, std::move(fields)});
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return in;
}

}  // namespace

double energy_kev_to_omega(double energy_kev) {
    if (!(energy_kev >= 0.0) || !std::isfinite(energy_kev)) {
        throw DomainError("energy must be finite and non-negative");
    }
    return energy_kev * 1000.0 * codata2018.ev / codata2018.hbar;
}

double omega_to_energy_kev(double omega) {
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw DomainError("angular frequency must be finite and non-negative");
    }
    return omega * codata2018.hbar / (1000.0 * codata2018.ev);
}

double mass_amu_to_kg(double mass_amu) {
    if (!positive_finite(mass_amu)) throw DomainError("mass must be positive");
    return mass_amu * codata2018.amu;
}

void validate(const Isotope& isotope) {
    if (isotope.name.empty()) throw DataError("isotope name is empty");
    if (!positive_finite(isotope.mass_amu)) {
        throw DataError(isotope.name + ": mass_amu must be positive");
    }
    if (!positive_finite(isotope.gamma_energy_kev)) {
        throw DataError(isotope.name + ": gamma_energy_kev must be positive");
    }
    if (isotope.excited_lifetime_s && !positive_finite(*isotope.excited_lifetime_s)) {
        throw DataError(isotope.name + ": excited_lifetime_s must be positive");
    }
}

void validate(const Medium& medium) {
    if (!positive_finite(medium.mass_density)) throw DataError("mass density must be positive");
    if (!positive_finite(medium.sound_speed)) throw DataError("sound speed must be positive");
}

Medium make_medium(double mass_density, double sound_speed) {
    Medium medium{mass_density, sound_speed};
    validate(medium);
    return medium;
}

LinearMedium linear_medium(const Medium& bulk, double lattice_spacing) {
    validate(bulk);
    if (!positive_finite(lattice_spacing)) throw DomainError("lattice spacing must be positive");
    return {bulk.mass_density * lattice_spacing * lattice_spacing, bulk.sound_speed};
}

LinearMedium chain_medium(double particle_mass, double spacing, double sound_speed) {
    if (!positive_finite(particle_mass) || !positive_finite(spacing) ||
        !positive_finite(sound_speed)) {
        throw DomainError("chain parameters must be positive");
    }
    return {particle_mass / spacing, sound_speed};
}

std::vector<Isotope> load_isotope_table(std::istream& source) {
    std::vector<Isotope> out;
    std::set<std::string, std::less<>> seen;
    for_each_record(source, [&](const Record& rec) {
        Isotope iso;
        iso.name = std::string(rec.fields[0]);
        iso.mass_amu = parse_number(rec.fields[1], rec.line_no, "mass_amu");
        iso.gamma_energy_kev = parse_number(rec.fields[2], rec.line_no, "gamma_energy_kev");
        if (rec.fields.size() == 4) {
            iso.excited_lifetime_s = parse_optional(rec.fields[3], rec.line_no, "excited_lifetime_s");
        }
        try {
            validate(iso);
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(rec.line_no) + ": " + e.what());
        }
        if (!seen.insert(iso.name).second) {
            throw DataError("line " + std::to_string(rec.line_no) + ": duplicate isotope '" +
                            iso.name + "'");
        }
        out.push_back(std::move(iso));
    });
    return out;
}

std::vector<Isotope> load_isotope_table_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_isotope_table(in);
}

std::vector<Material> load_material_table(std::istream& source) {
    std::vector<Material> out;
    std::set<std::string, std::less<>> seen;
    for_each_record(source, [&](const Record& rec) {
        Material mat;
        mat.name = std::string(rec.fields[0]);
        mat.medium.mass_density = parse_number(rec.fields[1], rec.line_no, "mass_density");
        mat.medium.sound_speed = parse_number(rec.fields[2], rec.line_no, "sound_speed");
        if (rec.fields.size() == 4) {
            mat.lattice_spacing_m = parse_optional(rec.fields[3], rec.line_no, "lattice_spacing");
        }
        const std::string where = "line " + std::to_string(rec.line_no) + ": ";
        try {
            validate(mat.medium);
        } catch (const DataError& e) {
            throw DataError(where + e.what());
        }
        if (mat.lattice_spacing_m && !positive_finite(*mat.lattice_spacing_m)) {
            throw DataError(where + "lattice spacing must be positive");
        }
        if (!seen.insert(mat.name).second) {
            throw DataError(where + "duplicate material '" + mat.name + "'");
        }
        out.push_back(std::move(mat));
    });
    return out;
}

std::vector<Material> load_material_table_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_material_table(in);
}

}  // namespace recoil
