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

#include <cmath>
#include <cstddef>

#include "casimir/simd/dispatch.hpp"

namespace casimir::simd::scalar {

void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double delta = s[i] * inv_u;
        const double t = t0 + delta;
        const double p2 = 1.0 + 0.25 * delta * (2.0 * t0 + delta);
        const double poly = 2.0 * p2 * (p2 - 1.0) + 1.0;
        double denom = 4.0 * std::sqrt(p2) * t * t;
        if (power == 3) {
            denom *= t;
        }
        out[i] = poly / denom * std::exp(-s[i]);
    }
}

void exp(std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::exp(x[i]);
    }
}

}  // namespace casimir::simd::scalar
