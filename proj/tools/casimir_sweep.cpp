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

// casimir-sweep: plate-sphere normal and lateral force curves for lamellar
// dielectric heterostructures, written as CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "casimir/errors.hpp"
#include "casimir/simd/dispatch.hpp"
#include "casimir/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConvergence = 2;

int default_threads() {
    if (const char* env = std::getenv("CASIMIR_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring malformed CASIMIR_THREADS='" << env << "'\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw casimir::sweep::ParseError(0, "cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal and lateral Casimir-Lifshitz forces between lamellar dielectric heterostructures"};
    app.set_version_flag("--version", "casimir-sweep 0.1.0");

    std::string config_path;
    std::string out_path;
    std::string summary_path;
    std::string simd = "auto";
    // Flag name -> config key. Flags override values read from --config.
    const std::pair<const char*, const char*> flag_keys[] = {
        {"--materials", "materials"}, {"--f", "f"},             {"--lambda", "lambda"},
        {"--H", "H"},                 {"--R", "R"},             {"--a-points", "a_points"},
        {"--outputs", "outputs"},     {"--rel-tol", "rel_tol"}, {"--m-max", "m_max"},
        {"--threads", "threads"},
    };
    std::map<std::string, std::string> flag_values;
    app.add_option("--config", config_path, "Config file (key=value per line, '#' comments)");
    for (const auto& [flag, key] : flag_keys) {
        app.add_option(flag, flag_values[key], std::string("Overrides config key '") + key + "'");
    }
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--summary", summary_path, "Per-curve summary CSV (F0, modulation, lateral amplitude)");
    app.add_option("--simd", simd, "Kernel variant: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    casimir::sweep::SweepTable table;
    try {
        if (simd == "scalar") {
            casimir::simd::set_active_isa(casimir::simd::Isa::Scalar);
        } else if (simd == "avx2") {
            casimir::simd::set_active_isa(casimir::simd::Isa::Avx2);
        }

        std::map<std::string, casimir::sweep::ConfigEntry> entries;
        if (!config_path.empty()) {
            entries = casimir::sweep::parse_config_entries(read_file(config_path));
        }
        for (const auto& [flag, key] : flag_keys) {
            if (app.count(flag) > 0) {
                entries[key] = casimir::sweep::ConfigEntry{flag_values[key], 0};
            }
        }
        const casimir::sweep::SweepSpec spec = casimir::sweep::build_spec(entries, default_threads());
        table = casimir::sweep::run_sweep(spec);
    } catch (const casimir::sweep::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const casimir::sweep::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const casimir::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (const std::string& w : table.warnings) {
        std::cerr << "warning: " << w << '\n';
    }

    if (out_path.empty()) {
        casimir::sweep::write_csv(table, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        casimir::sweep::write_csv(table, out);
    }
    if (!summary_path.empty()) {
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << summary_path << "'\n";
            return kExitUsage;
        }
        casimir::sweep::write_summary_csv(table, out);
    }
    return table.all_converged() ? kExitOk : kExitConvergence;
}
