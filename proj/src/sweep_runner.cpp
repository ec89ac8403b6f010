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
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "casimir/forces.hpp"
#include "casimir/sweep.hpp"

namespace casimir::sweep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Hands out indices in [0, n) to `threads` workers. fn must not throw and
// must write only to slots owned by its index.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
}

struct CacheSlot {
    std::optional<HarmonicCache> cache;
    std::string failure;
};

}  // namespace

bool SweepTable::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
}

SweepTable run_sweep(const SweepSpec& spec) {
    spec.validate();
    const bool want_lateral = (spec.outputs & kLateral) != 0;
    const bool want_normal = (spec.outputs & kNormal) != 0;
    const bool want_ratio = (spec.outputs & kNormalNormalized) != 0;

    SweepTable table;
    table.material_pair = spec.material_pair();
    table.wavelength = spec.wavelength;
    table.outputs = spec.outputs;

    const std::size_t n_f = spec.f_values.size();
    const std::size_t n_H = spec.H_values.size();
    const std::size_t n_curves = n_f * n_H;
    const auto n_a = static_cast<std::size_t>(spec.a_points);

    std::vector<CacheSlot> slots(n_curves);
    parallel_for(n_curves, spec.threads, [&](std::size_t i) {
        const LamellarProfile profile{spec.high, spec.low, spec.f_values[i / n_H], spec.wavelength};
        try {
            slots[i].cache = HarmonicCache::build(profile, spec.H_values[i % n_H], spec.tolerances, want_lateral);
        } catch (const std::exception& err) {
            slots[i].failure = err.what();
        }
    });

    table.rows.resize(n_curves * n_a);
    parallel_for(table.rows.size(), spec.threads, [&](std::size_t idx) {
        const std::size_t curve = idx / n_a;
        const std::size_t k = idx % n_a;
        SweepRow& row = table.rows[idx];
        row.f = spec.f_values[curve / n_H];
        row.H = spec.H_values[curve % n_H];
        row.a = static_cast<double>(k) / static_cast<double>(n_a);
        const CacheSlot& slot = slots[curve];
        if (!slot.cache) {
            row.converged = false;
            row.F_normal = row.F_normal_over_F0 = row.F_lateral = kNaN;
            row.err_normal = row.err_lateral = kNaN;
            return;
        }
        const HarmonicCache& cache = *slot.cache;
        const ForceResult normal = cache.normal_force_ps(row.a, spec.R);
        const ForceResult f0 = cache.normalization_force_ps0(spec.R);
        row.F_normal = want_normal ? normal.value : kNaN;
        row.F_normal_over_F0 = want_ratio ? normal.value / f0.value : kNaN;
        row.err_normal = (want_normal || want_ratio) ? normal.error_estimate : kNaN;
        if (want_lateral) {
            const ForceResult lateral = cache.lateral_force_ps(row.a, spec.R);
            row.F_lateral = lateral.value;
            row.err_lateral = lateral.error_estimate;
        } else {
            row.F_lateral = row.err_lateral = kNaN;
        }
        row.harmonics_used = cache.harmonics_used();
    });

    for (std::size_t curve = 0; curve < n_curves; ++curve) {
        CurveSummary s;
        s.f = spec.f_values[curve / n_H];
        s.H = spec.H_values[curve % n_H];
        const CacheSlot& slot = slots[curve];
        if (!slot.cache) {
            s.converged = false;
            s.F0 = s.modulation_peak_to_peak = s.modulation_max_deviation = s.lateral_amplitude = kNaN;
            table.warnings.push_back("f=" + format_number(s.f) + " H=" + format_number(s.H) +
                                     ": " + slot.failure);
            table.curves.push_back(s);
            continue;
        }
        const HarmonicCache& cache = *slot.cache;
        s.F0 = cache.normalization_force_ps0(spec.R).value;
        s.harmonics_used = cache.harmonics_used();
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        double lateral = 0.0;
        for (std::size_t k = 0; k < n_a; ++k) {
            const double a = static_cast<double>(k) / static_cast<double>(n_a);
            const double ratio = cache.normal_force_ps(a, spec.R).value / s.F0;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            s.modulation_max_deviation = std::max(s.modulation_max_deviation, std::abs(ratio - 1.0));
            if (want_lateral) {
                lateral = std::max(lateral, std::abs(cache.lateral_force_ps(a, spec.R).value));
            }
        }
        s.modulation_peak_to_peak = hi - lo;
        s.lateral_amplitude = want_lateral ? lateral : kNaN;
        table.curves.push_back(s);
        if (spec.R < 10.0 * s.H) {
            table.warnings.push_back("R < 10 H at H=" + format_number(s.H) +
                                     ": outside the proximity-force regime");
        }
    }
    return table;
}

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", value == 0.0 ? 0.0 : value);
    return buf;
}

void write_csv(const SweepTable& table, std::ostream& out) {
    out << "material_pair,f,lambda_m,H_m,a,F_normal_N,F_normal_over_F0,F_lateral_N,err_normal_N,"
           "err_lateral_N,harmonics_used,status\n";
    const std::string lambda = format_number(table.wavelength);
    for (const SweepRow& r : table.rows) {
        out << table.material_pair << ',' << format_number(r.f) << ',' << lambda << ',' << format_number(r.H) << ','
            << format_number(r.a) << ',' << format_number(r.F_normal) << ',' << format_number(r.F_normal_over_F0)
            << ',' << format_number(r.F_lateral) << ',' << format_number(r.err_normal) << ','
            << format_number(r.err_lateral) << ',' << r.harmonics_used << ','
            << (r.converged ? "ok" : "convergence_failure") << '\n';
    }
}

void write_summary_csv(const SweepTable& table, std::ostream& out) {
    out << "material_pair,f,lambda_m,H_m,F0_N,modulation_peak_to_peak,modulation_max_deviation,"
           "lateral_amplitude_N,harmonics_used,status\n";
    const std::string lambda = format_number(table.wavelength);
    for (const CurveSummary& s : table.curves) {
        out << table.material_pair << ',' << format_number(s.f) << ',' << lambda << ',' << format_number(s.H) << ','
            << format_number(s.F0) << ',' << format_number(s.modulation_peak_to_peak) << ','
            << format_number(s.modulation_max_deviation) << ',' << format_number(s.lateral_amplitude) << ','
            << s.harmonics_used << ',' << (s.converged ? "ok" : "convergence_failure") << '\n';
    }
}

}  // namespace casimir::sweep
