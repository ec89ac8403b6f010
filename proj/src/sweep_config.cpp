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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/sweep.hpp"

namespace casimir::sweep {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string_view::npos ? s.size() : comma;
        items.push_back(trim(s.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return items;
}

double parse_number(std::string_view text, int line, const std::string& key) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(line, "'" + key + "': malformed number '" + std::string(text) + "'");
    }
    return value;
}

int parse_integer(std::string_view text, int line, const std::string& key) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(line, "'" + key + "': malformed integer '" + std::string(text) + "'");
    }
    return value;
}

struct Unit {
    std::string_view suffix;
    double scale;
};

// Longest suffixes first so that "nm" is not read as "m".
constexpr Unit kUnits[] = {{"nm", 1e-9}, {"um", 1e-6}, {"\xCE\xBCm", 1e-6}, {"m", 1.0}};

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

ValidationError::ValidationError(std::string key, const std::string& message)
    : std::runtime_error("invalid '" + key + "': " + message), key_(std::move(key)) {}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "materials", "f",       "lambda",          "H",     "R",
        "a_points",  "outputs", "rel_tol",         "abs_tol", "max_subdivisions",
        "m_max",     "series_tail_tol", "threads",
    };
    return keys;
}

double parse_length(std::string_view text, int line) {
    text = trim(text);
    for (const Unit& unit : kUnits) {
        if (text.size() > unit.suffix.size() && text.substr(text.size() - unit.suffix.size()) == unit.suffix) {
            const std::string_view number = trim(text.substr(0, text.size() - unit.suffix.size()));
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
            if (number.empty() || ec != std::errc() || ptr != number.data() + number.size()) {
                break;
            }
            return value * unit.scale;
        }
    }
    throw ParseError(line, "length '" + std::string(text) + "' needs a number and a unit (nm, um or m)");
}

std::map<std::string, ConfigEntry> parse_config_entries(std::string_view text) {
    std::map<std::string, ConfigEntry> entries;
    const auto& keys = config_keys();
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(line_no, "expected key=value, got '" + std::string(line) + "'");
            }
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw ParseError(line_no, "unknown key '" + key + "'");
            }
            if (entries.contains(key)) {
                throw ParseError(line_no, "key '" + key + "' given twice");
            }
            entries[key] = ConfigEntry{value, line_no};
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    return entries;
}

SweepSpec build_spec(const std::map<std::string, ConfigEntry>& entries, int default_threads) {
    SweepSpec spec;
    auto find = [&](const std::string& key) -> const ConfigEntry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto require = [&](const std::string& key) -> const ConfigEntry& {
        const ConfigEntry* e = find(key);
        if (e == nullptr) {
            throw ValidationError(key, "required key is missing");
        }
        return *e;
    };

    {
        const ConfigEntry& e = require("materials");
        const auto names = split_list(e.value);
        if (names.size() != 2 || names[0].empty() || names[1].empty()) {
            throw ValidationError("materials", "expected two names 'high,low'");
        }
        spec.high_name = std::string(names[0]);
        spec.low_name = std::string(names[1]);
        try {
            spec.high = material_by_name(names[0]);
            spec.low = material_by_name(names[1]);
        } catch (const DomainError& err) {
            throw ValidationError("materials", err.what());
        }
    }
    {
        const ConfigEntry& e = require("f");
        if (!trim(e.value).empty()) {
            for (auto item : split_list(e.value)) {
                spec.f_values.push_back(parse_number(item, e.line, "f"));
            }
        }
    }
    spec.wavelength = parse_length(require("lambda").value, require("lambda").line);
    {
        const ConfigEntry& e = require("H");
        if (!trim(e.value).empty()) {
            for (auto item : split_list(e.value)) {
                spec.H_values.push_back(parse_length(item, e.line));
            }
        }
    }
    spec.R = parse_length(require("R").value, require("R").line);
    if (const ConfigEntry* e = find("a_points")) {
        spec.a_points = parse_integer(e->value, e->line, "a_points");
    }
    if (const ConfigEntry* e = find("outputs")) {
        spec.outputs = 0;
        for (auto item : split_list(e->value)) {
            if (item == "normal") {
                spec.outputs |= kNormal;
            } else if (item == "normal_normalized") {
                spec.outputs |= kNormalNormalized;
            } else if (item == "lateral") {
                spec.outputs |= kLateral;
            } else {
                throw ValidationError("outputs", "unknown observable '" + std::string(item) + "'");
            }
        }
    }
    if (const ConfigEntry* e = find("rel_tol")) {
        spec.tolerances.rel_tol = parse_number(e->value, e->line, "rel_tol");
    }
    if (const ConfigEntry* e = find("abs_tol")) {
        spec.tolerances.abs_tol = parse_number(e->value, e->line, "abs_tol");
    }
    if (const ConfigEntry* e = find("max_subdivisions")) {
        spec.tolerances.max_subdivisions = parse_integer(e->value, e->line, "max_subdivisions");
    }
    if (const ConfigEntry* e = find("m_max")) {
        spec.tolerances.m_max = parse_integer(e->value, e->line, "m_max");
    }
    if (const ConfigEntry* e = find("series_tail_tol")) {
        spec.tolerances.series_tail_tol = parse_number(e->value, e->line, "series_tail_tol");
    }
    spec.threads = default_threads;
    if (const ConfigEntry* e = find("threads")) {
        spec.threads = parse_integer(e->value, e->line, "threads");
    }

    std::sort(spec.f_values.begin(), spec.f_values.end());
    std::sort(spec.H_values.begin(), spec.H_values.end());
    spec.validate();
    return spec;
}

SweepSpec parse_config(std::string_view text, int default_threads) {
    return build_spec(parse_config_entries(text), default_threads);
}

void SweepSpec::validate() const {
    if (f_values.empty()) {
        throw ValidationError("f", "at least one fill fraction is required");
    }
    for (double f : f_values) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw ValidationError("f", "fill fractions must lie in [0, 1]");
        }
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw ValidationError("lambda", "must be > 0");
    }
    if (H_values.empty()) {
        throw ValidationError("H", "at least one gap is required");
    }
    for (double H : H_values) {
        if (!(H > 0.0) || !std::isfinite(H)) {
            throw ValidationError("H", "gaps must be > 0");
        }
    }
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw ValidationError("R", "must be > 0");
    }
    if (a_points < 2) {
        throw ValidationError("a_points", "must be >= 2");
    }
    if (outputs == 0) {
        throw ValidationError("outputs", "select at least one observable");
    }
    if (!(tolerances.rel_tol > 0.0)) {
        throw ValidationError("rel_tol", "must be > 0");
    }
    if (!(tolerances.abs_tol > 0.0)) {
        throw ValidationError("abs_tol", "must be > 0");
    }
    if (tolerances.max_subdivisions < 0) {
        throw ValidationError("max_subdivisions", "must be >= 0");
    }
    if (tolerances.m_max < 1) {
        throw ValidationError("m_max", "must be >= 1");
    }
    if (!(tolerances.series_tail_tol > 0.0)) {
        throw ValidationError("series_tail_tol", "must be > 0");
    }
    if (threads < 1) {
        throw ValidationError("threads", "must be >= 1");
    }
}

}  // namespace casimir::sweep
