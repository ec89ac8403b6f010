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

#include "casimir/materials.hpp"

namespace casimir {

/// Unidirectional periodic stack: a high-permittivity stripe of width f*lambda
/// centred on x = 0 in every cell, the rest filled with the low material.
struct LamellarProfile {
    DielectricModel high = material::Vacuum{};
    DielectricModel low = material::Vacuum{};
    double fill_fraction = 0.5;
    double wavelength = 1e-6;  // m

    void validate() const;
};

/// Real Fourier coefficient C_m(i zeta) of the Clausius-Mossotti contrast
/// profile. The profile is even in x, so C_{-m} == C_m.
double fourier_coeff(const LamellarProfile& profile, int m, double zeta);

/// sin(m pi f) / (m pi): the zeta-independent shape factor of C_m, m >= 1.
double harmonic_shape(double fill_fraction, int m);

/// Partial Fourier synthesis sum_{|m| <= m_max} C_m e^{2 pi i m x / lambda}.
double synthesize_profile(const LamellarProfile& profile, double x, int m_max, double zeta);

}  // namespace casimir
