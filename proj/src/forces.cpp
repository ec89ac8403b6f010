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

#include "casimir/forces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "casimir/kernels.hpp"
#include "casimir/materials.hpp"

namespace casimir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_gap(double H) {
    if (!(H > 0.0) || !std::isfinite(H)) {
        throw DomainError("gap H must be > 0");
    }
}

void require_radius(double R) {
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw DomainError("sphere radius R must be > 0");
    }
}

bool has_contrast(const LamellarProfile& p) { return !(p.high == p.low); }

// Inner kernel integrals are solved an order of magnitude tighter than the
// zeta integral they feed.
QuadratureSettings inner_settings(const QuadratureSettings& outer) {
    QuadratureSettings inner = outer;
    inner.rel_tol = std::max(0.1 * outer.rel_tol, 1e-14);
    return inner;
}

struct TermBuilder {
    const LamellarProfile& upper;
    const LamellarProfile& lower;
    double H;
    const QuadratureSettings& outer;
    QuadratureSettings inner;
    bool with_gap;

    // C_m^u(zeta) C_m^d(zeta) for m >= 1, up to the constant shape factor.
    double contrast_product(double zeta) const {
        return (cm_ratio(upper.high, zeta) - cm_ratio(upper.low, zeta)) *
               (cm_ratio(lower.high, zeta) - cm_ratio(lower.low, zeta));
    }

    double average_product(double zeta) const {
        return fourier_coeff(upper, 0, zeta) * fourier_coeff(lower, 0, zeta);
    }

    HarmonicTerm build(int m) const {
        HarmonicTerm term;
        term.m = m;
        double shape = 1.0;
        if (m > 0) {
            shape = harmonic_shape(upper.fill_fraction, m) * harmonic_shape(lower.fill_fraction, m);
            if (shape == 0.0 || !has_contrast(upper) || !has_contrast(lower)) {
                return term;
            }
        }
        const double Q = kTwoPi * m / upper.wavelength;
        const double zeta_scale = PhysicalConstants::c / (2.0 * H);
        std::size_t inner_evals = 0;

        auto coupling = [&](double zeta) {
            return m == 0 ? average_product(zeta) : shape * contrast_product(zeta);
        };
        auto integrate = [&](auto kernel) {
            const ScalarIntegrand f = [&](double zeta) {
                const double w = coupling(zeta);
                if (w == 0.0) {
                    return 0.0;
                }
                const IntegralEstimate k = kernel(KernelArgs{Q, zeta, H}, inner);
                inner_evals += k.evaluations;
                return k.value * w;
            };
            IntegralEstimate est = integrate_semi_infinite(f, 0.0, zeta_scale, outer);
            est.error_estimate += inner.rel_tol * std::abs(est.value);
            return est;
        };

        const IntegralEstimate normal = integrate(scaled_kernel);
        term.normal = normal.value;
        term.normal_error = normal.error_estimate;
        term.evaluations = normal.evaluations;
        if (with_gap) {
            const IntegralEstimate gap = integrate(scaled_gap_kernel);
            term.gap = gap.value;
            term.gap_error = gap.error_estimate;
            term.evaluations += gap.evaluations;
        }
        term.evaluations += inner_evals;
        return term;
    }
};

}  // namespace

void Geometry::validate(bool needs_radius) const {
    require_gap(H);
    if (!std::isfinite(a)) {
        throw DomainError("lateral displacement a must be finite");
    }
    if (needs_radius) {
        require_radius(R);
    }
}

HarmonicPhase harmonic_phase(int m, double a) {
    const double reduced = a - std::round(a);
    const double x = static_cast<double>(m) * reduced;
    const double phase = x - std::round(x);  // in [-1/2, 1/2]
    const double mag = std::abs(phase);
    HarmonicPhase out;
    if (mag == 0.0) {
        out = {1.0, 0.0};
    } else if (mag == 0.25) {
        out = {0.0, 1.0};
    } else if (mag == 0.5) {
        out = {-1.0, 0.0};
    } else {
        out = {std::cos(kTwoPi * mag), std::sin(kTwoPi * mag)};
    }
    if (phase < 0.0) {
        out.sin = -out.sin;
    }
    return out;
}

double energy_prefactor() {
    constexpr double c = PhysicalConstants::c;
    return PhysicalConstants::hbar / (2.0 * std::numbers::pi * std::numbers::pi * c * c);
}

HarmonicCache HarmonicCache::build(const LamellarProfile& profile, double H, const QuadratureSettings& settings,
                                   bool with_gap) {
    return build(profile, profile, H, settings, with_gap);
}

HarmonicCache HarmonicCache::build(const LamellarProfile& upper, const LamellarProfile& lower, double H,
                                   const QuadratureSettings& settings, bool with_gap) {
    upper.validate();
    lower.validate();
    settings.validate();
    require_gap(H);
    if (upper.wavelength != lower.wavelength) {
        throw DomainError("upper and lower profiles must share one wavelength");
    }

    HarmonicCache cache;
    cache.H_ = H;
    cache.wavelength_ = upper.wavelength;
    cache.with_gap_ = with_gap;

    const TermBuilder builder{upper, lower, H, settings, inner_settings(settings), with_gap};
    PrimedSeries series(settings);
    const double k = kTwoPi / upper.wavelength;
    for (int m = 0; m <= settings.m_max; ++m) {
        HarmonicTerm term = builder.build(m);
        cache.evaluations_ += term.evaluations;
        // Tail test on the magnitudes feeding both the cosine (energy, normal
        // force) and the sine (lateral force) series.
        series.add(m, std::abs(term.normal) + k * m * std::abs(term.gap));
        cache.terms_.push_back(term);
        if (series.converged()) {
            break;
        }
    }
    if (!series.converged()) {
        throw ConvergenceFailure("harmonic series did not converge by m_max = " + std::to_string(settings.m_max),
                                 series.estimate());
    }

    const auto n = cache.terms_.size();
    for (std::size_t i = n >= 2 ? n - 2 : 0; i < n; ++i) {
        cache.normal_tail_ += std::abs(cache.terms_[i].normal);
        cache.gap_tail_ += std::abs(cache.terms_[i].gap);
    }
    return cache;
}

ForceResult HarmonicCache::synthesize_cos(double a, bool use_gap, double prefactor) const {
    if (use_gap && !with_gap_) {
        throw std::logic_error("harmonic cache was built without gap-integrated terms");
    }
    if (!std::isfinite(a)) {
        throw DomainError("lateral displacement a must be finite");
    }
    double sum = 0.0;
    double err = use_gap ? gap_tail_ : normal_tail_;
    for (const HarmonicTerm& t : terms_) {
        const double value = use_gap ? t.gap : t.normal;
        const double error = use_gap ? t.gap_error : t.normal_error;
        if (t.m == 0) {
            sum += 0.5 * value;
            err += 0.5 * error;
        } else {
            sum += value * harmonic_phase(t.m, a).cos;
            err += error;
        }
    }
    ForceResult out;
    out.value = prefactor * sum;
    out.error_estimate = std::abs(prefactor) * err;
    out.harmonics_used = harmonics_used();
    out.evaluations = evaluations_;
    return out;
}

ForceResult HarmonicCache::energy_pp_per_area(double a) const {
    return synthesize_cos(a, false, -energy_prefactor());
}

ForceResult HarmonicCache::normal_force_ps(double a, double R) const {
    require_radius(R);
    ForceResult out = synthesize_cos(a, false, -energy_prefactor() * kTwoPi * R);
    out.outside_validity = R < 10.0 * H_;
    return out;
}

ForceResult HarmonicCache::normalization_force_ps0(double R) const {
    require_radius(R);
    const double prefactor = -energy_prefactor() * kTwoPi * R;
    const HarmonicTerm& t0 = terms_.front();
    ForceResult out;
    out.value = prefactor * 0.5 * t0.normal;
    out.error_estimate = std::abs(prefactor) * 0.5 * t0.normal_error;
    out.harmonics_used = 1;
    out.evaluations = t0.evaluations;
    out.outside_validity = R < 10.0 * H_;
    return out;
}

ForceResult HarmonicCache::energy_ps(double a, double R) const {
    require_radius(R);
    ForceResult out = synthesize_cos(a, true, -energy_prefactor() * kTwoPi * R);
    out.outside_validity = R < 10.0 * H_;
    return out;
}

ForceResult HarmonicCache::lateral_force_ps(double a, double R) const {
    require_radius(R);
    if (!with_gap_) {
        throw std::logic_error("harmonic cache was built without gap-integrated terms");
    }
    if (!std::isfinite(a)) {
        throw DomainError("lateral displacement a must be finite");
    }
    double sum = 0.0;
    double err = 0.0;
    for (const HarmonicTerm& t : terms_) {
        if (t.m == 0) {
            continue;
        }
        const double weight = kTwoPi * t.m;
        sum += weight * t.gap * harmonic_phase(t.m, a).sin;
        err += weight * t.gap_error;
    }
    const auto n = terms_.size();
    for (std::size_t i = n >= 2 ? n - 2 : 0; i < n; ++i) {
        err += kTwoPi * terms_[i].m * std::abs(terms_[i].gap);
    }
    const double prefactor = -(kTwoPi * R / wavelength_) * energy_prefactor();
    ForceResult out;
    out.value = prefactor * sum;
    out.error_estimate = std::abs(prefactor) * err;
    out.harmonics_used = harmonics_used();
    out.evaluations = evaluations_;
    out.outside_validity = R < 10.0 * H_;
    return out;
}

ForceResult energy_pp_per_area(const LamellarProfile& profile, const Geometry& geom,
                               const QuadratureSettings& settings) {
    geom.validate(false);
    return HarmonicCache::build(profile, geom.H, settings, false).energy_pp_per_area(geom.a);
}

ForceResult normal_force_ps(const LamellarProfile& profile, const Geometry& geom,
                            const QuadratureSettings& settings) {
    geom.validate(true);
    return HarmonicCache::build(profile, geom.H, settings, false).normal_force_ps(geom.a, geom.R);
}

ForceResult normalization_force_ps0(const LamellarProfile& profile, double H, double R,
                                    const QuadratureSettings& settings) {
    require_gap(H);
    require_radius(R);
    return HarmonicCache::build(profile, H, settings, false).normalization_force_ps0(R);
}

ForceResult lateral_force_ps(const LamellarProfile& profile, const Geometry& geom,
                             const QuadratureSettings& settings) {
    geom.validate(true);
    return HarmonicCache::build(profile, geom.H, settings, true).lateral_force_ps(geom.a, geom.R);
}

ForceResult energy_ps(const LamellarProfile& profile, const Geometry& geom, const QuadratureSettings& settings) {
    geom.validate(true);
    return HarmonicCache::build(profile, geom.H, settings, true).energy_ps(geom.a, geom.R);
}

}  // namespace casimir
