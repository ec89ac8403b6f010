// Copyright 2026 the lamellar-casimir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::sweep {

/// Malformed configuration text or value; carries the 1-based line number
/// (0 when the value came from the command line).
class ParseError : public std::runtime_error {
 public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

 private:
    int line_;
};

/// A well-formed value that violates a constraint; names the offending key.
class ValidationError : public std::runtime_error {
 public:
    ValidationError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

 private:
    std::string key_;
};

enum Output : unsigned {
    kNormal = 1u << 0,
    kNormalNormalized = 1u << 1,
    kLateral = 1u << 2,
};

struct SweepSpec {
    std::string high_name;
    std::string low_name;
    DielectricModel high;
    DielectricModel low;
    std::vector<double> f_values;
    double wavelength = 0.0;     // m
    std::vector<double> H_values;  // m
    double R = 0.0;              // m
    int a_points = 64;
    unsigned outputs = kNormal | kNormalNormalized | kLateral;
    QuadratureSettings tolerances;
    int threads = 1;

    /// Throws ValidationError naming the first offending key.
    void validate() const;
    std::string material_pair() const { return high_name + "-" + low_name; }
};

struct ConfigEntry {
    std::string value;
    int line = 0;
};

/// Recognised keys, in documentation order.
const std::vector<std::string>& config_keys();

/// Splits key=value lines ('#' starts a comment). Unknown or repeated keys
/// and lines without '=' raise ParseError.
std::map<std::string, ConfigEntry> parse_config_entries(std::string_view text);

/// Converts entries to a validated SweepSpec. Values with a missing or
/// unknown unit raise ParseError; constraint violations ValidationError.
/// `default_threads` is used when no threads key is present.
SweepSpec build_spec(const std::map<std::string, ConfigEntry>& entries, int default_threads = 1);

SweepSpec parse_config(std::string_view text, int default_threads = 1);

/// "100nm", "1um", "1.5e-7m" -> metres.
double parse_length(std::string_view text, int line = 0);

struct SweepRow {
    double f = 0.0;
    double H = 0.0;
    double a = 0.0;
    double F_normal = 0.0;
    double F_normal_over_F0 = 0.0;
    double F_lateral = 0.0;
    double err_normal = 0.0;
    double err_lateral = 0.0;
    int harmonics_used = 0;
    bool converged = true;
};

/// Per-(f, H) curve statistics. Two modulation measures are reported:
/// peak-to-peak of F/F0 and the largest |F/F0 - 1|.
struct CurveSummary {
    double f = 0.0;
    double H = 0.0;
    double F0 = 0.0;
    double modulation_peak_to_peak = 0.0;
    double modulation_max_deviation = 0.0;
    double lateral_amplitude = 0.0;
    int harmonics_used = 0;
    bool converged = true;
};

struct SweepTable {
    std::string material_pair;
    double wavelength = 0.0;
    unsigned outputs = 0;
    std::vector<SweepRow> rows;  // lexicographic in (f, H, a)
    std::vector<CurveSummary> curves;
    std::vector<std::string> warnings;

    bool all_converged() const;
};

/// Evaluates every (f, H, a) grid point. One harmonic cache per (f, H) is
/// built; caches and rows are distributed over spec.threads workers and the
/// output does not depend on the thread count.
SweepTable run_sweep(const SweepSpec& spec);

/// 12 significant digits, '.' decimal separator, LF line endings.
void write_csv(const SweepTable& table, std::ostream& out);
void write_summary_csv(const SweepTable& table, std::ostream& out);

std::string format_number(double value);

}  // namespace casimir::sweep
