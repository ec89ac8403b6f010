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

#include "casimir/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

void LamellarProfile::validate() const {
    if (!(fill_fraction >= 0.0 && fill_fraction <= 1.0)) {
        throw DomainError("fill fraction must lie in [0, 1], got " + std::to_string(fill_fraction));
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw DomainError("wavelength must be > 0");
    }
    casimir::validate(high);
    casimir::validate(low);
}

double harmonic_shape(double fill_fraction, int m) {
    if (m < 1) {
        throw DomainError("harmonic_shape requires m >= 1");
    }
    if (fill_fraction == 0.0 || fill_fraction == 1.0) {
        return 0.0;
    }
    // Reduce m*f mod 2 before multiplying by pi so that sin vanishes exactly
    // whenever m*f is an integer.
    const double phase = std::fmod(static_cast<double>(m) * fill_fraction, 2.0);
    double s = 0.0;
    if (phase != 0.0 && phase != 1.0) {
        s = std::sin(std::numbers::pi * phase);
    }
    return s / (static_cast<double>(m) * std::numbers::pi);
}

double fourier_coeff(const LamellarProfile& profile, int m, double zeta) {
    profile.validate();
    if (m < 0) {
        throw DomainError("fourier_coeff requires m >= 0");
    }
    const double r_high = cm_ratio(profile.high, zeta);
    const double r_low = cm_ratio(profile.low, zeta);
    const double f = profile.fill_fraction;
    if (m == 0) {
        return f * r_high + (1.0 - f) * r_low;
    }
    return harmonic_shape(f, m) * (r_high - r_low);
}

double synthesize_profile(const LamellarProfile& profile, double x, int m_max, double zeta) {
    profile.validate();
    const double r_high = cm_ratio(profile.high, zeta);
    const double r_low = cm_ratio(profile.low, zeta);
    const double f = profile.fill_fraction;
    const double k = 2.0 * std::numbers::pi / profile.wavelength;
    double sum = f * r_high + (1.0 - f) * r_low;
    for (int m = 1; m <= m_max; ++m) {
        sum += 2.0 * harmonic_shape(f, m) * (r_high - r_low) * std::cos(k * m * x);
    }
    return sum;
}

}  // namespace casimir
