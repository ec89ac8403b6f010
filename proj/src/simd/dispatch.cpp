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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "casimir/simd/dispatch.hpp"

namespace casimir::simd {
namespace {

bool cpu_has_avx2() {
#if defined(CASIMIR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() {
    if (const char* env = std::getenv("CASIMIR_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return Isa::Scalar;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
            return cpu_has_avx2();
    }
    return false;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument(std::string("SIMD variant not available: ") + isa_name(isa));
    }
    active().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power) {
#if defined(CASIMIR_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) {
        avx2::gap_kernel_panel(s, out, t0, inv_u, power);
        return;
    }
#endif
    scalar::gap_kernel_panel(s, out, t0, inv_u, power);
}

}  // namespace casimir::simd
