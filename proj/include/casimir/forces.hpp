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
#include <span>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spectral.hpp"

namespace casimir {

/// Gap H (m), lateral displacement a (units of the wavelength, taken mod 1)
/// and sphere radius R (m; plate-sphere observables only).
struct Geometry {
    double H = 100e-9;
    double a = 0.0;
    double R = 0.0;

    void validate(bool needs_radius) const;
};

/// A physical output with its numerical error budget.
struct ForceResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int harmonics_used = 1;
    std::size_t evaluations = 0;
    bool outside_validity = false;  // Derjaguin regime R >= 10 H violated
};

/// cos and sin of 2 pi m a with a reduced mod 1 first. Exact at the quarter
/// points, odd/even in a bit for bit.
struct HarmonicPhase {
    double cos = 1.0;
    double sin = 0.0;
};
HarmonicPhase harmonic_phase(int m, double a);

/// zeta-integrated coefficients of harmonic m:
///   normal = int_0^inf dzeta zeta^2 E(2 pi m / lambda) C_m^u C_m^d
///   gap    = the same with the H-integrated kernel (int_H^inf dH' of normal)
struct HarmonicTerm {
    int m = 0;
    double normal = 0.0;
    double normal_error = 0.0;
    double gap = 0.0;
    double gap_error = 0.0;
    std::size_t evaluations = 0;
};

/// The m-resolved coefficients at one gap. Immutable once built and safe to
/// share between threads; every observable at any a is a cheap cosine/sine
/// synthesis over the cached terms.
class HarmonicCache {
 public:
    /// Identical upper and lower bodies.
    static HarmonicCache build(const LamellarProfile& profile, double H, const QuadratureSettings& settings,
                               bool with_gap = true);

    /// Different stacks with the same wavelength; the coupling is C_m^u C_m^d.
    static HarmonicCache build(const LamellarProfile& upper, const LamellarProfile& lower, double H,
                               const QuadratureSettings& settings, bool with_gap = true);

    double gap() const noexcept { return H_; }
    double wavelength() const noexcept { return wavelength_; }
    bool has_gap_terms() const noexcept { return with_gap_; }
    std::span<const HarmonicTerm> terms() const noexcept { return terms_; }
    int harmonics_used() const noexcept { return static_cast<int>(terms_.size()); }
    std::size_t evaluations() const noexcept { return evaluations_; }

    /// E_pp / A in J/m^2.
    ForceResult energy_pp_per_area(double a) const;
    /// Derjaguin normal force 2 pi R E_pp/A in N; negative is attractive.
    ForceResult normal_force_ps(double a, double R) const;
    /// m = 0 part of normal_force_ps (laterally averaged profile).
    ForceResult normalization_force_ps0(double R) const;
    /// E_ps = int_H^inf F_nor dH' in J, so that F_nor = -dE_ps/dH.
    ForceResult energy_ps(double a, double R) const;
    /// F_lat = -(1/lambda) dE_ps/da in N; positive pushes the upper body to +x.
    ForceResult lateral_force_ps(double a, double R) const;

 private:
    HarmonicCache() = default;
    ForceResult synthesize_cos(double a, bool use_gap, double prefactor) const;

    double H_ = 0.0;
    double wavelength_ = 0.0;
    bool with_gap_ = false;
    double normal_tail_ = 0.0;
    double gap_tail_ = 0.0;
    std::vector<HarmonicTerm> terms_;
    std::size_t evaluations_ = 0;
};

/// hbar / (2 pi^2 c^2), the prefactor of the second-order energy.
double energy_prefactor();

ForceResult energy_pp_per_area(const LamellarProfile& profile, const Geometry& geom,
                               const QuadratureSettings& settings);
ForceResult normal_force_ps(const LamellarProfile& profile, const Geometry& geom,
                            const QuadratureSettings& settings);
ForceResult normalization_force_ps0(const LamellarProfile& profile, double H, double R,
                                    const QuadratureSettings& settings);
ForceResult lateral_force_ps(const LamellarProfile& profile, const Geometry& geom,
                             const QuadratureSettings& settings);
ForceResult energy_ps(const LamellarProfile& profile, const Geometry& geom, const QuadratureSettings& settings);

}  // namespace casimir
