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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace recoil::cli {

inline constexpr const char* schema_version = "1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_physics = 3,
    exit_verification = 4,
};

/// Caveats carried in every output record.
inline constexpr const char* amplitude_note =
    "trap amplitude convention: b = V/Omega = 2c/omega0, so kb = omega0*b/c = 2 and the "
    "reported excursion is the peak-to-peak 2b; the closed form b = c/omega0 would halve both";
inline constexpr const char* relaxation_note =
    "relaxation caveat: hbar*Omega/I = 16*rho1*lambda_s/(m*Omega) whereas the 1D relaxation "
    "time is 8*rho1*lambda_s/(pi*m*Omega); the two differ by a factor 2*pi and both are reported";

/// Rounds to 9 significant digits so every serialization shows the same value.
double sig9(double x);
/// Scientific notation with 9 significant digits, e.g. 2.18774513e+19.
std::string format_number(double x);

/// One invocation's output: schema_version, command, inputs, results, notes.
struct OutputRecord {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<std::string> notes{amplitude_note, relaxation_note};

    nlohmann::ordered_json to_json() const;
};

/// RFC-4180 field quoting.
std::string csv_field(const std::string& text);

/// Flattens inputs, results and notes into `section,key,value` rows.
void write_key_value_csv(const OutputRecord& record, std::ostream& out);

struct Environment {
    /// Default isotope table, normally from RECOIL_LINES_TABLE.
    std::optional<std::string> table_path;

    static Environment from_process();
};

/// Runs one `recoil-lines` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace recoil::cli
