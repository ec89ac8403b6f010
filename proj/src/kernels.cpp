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

#include "casimir/kernels.hpp"

#include <cmath>

#include "casimir/materials.hpp"
#include "casimir/simd/dispatch.hpp"

namespace casimir {
namespace {

constexpr double c_light = PhysicalConstants::c;

// Beyond this exponent e^{-u t0} is below the smallest subnormal.
constexpr double kUnderflowExponent = 746.0;

struct Reduced {
    double u = 0.0;
    double exponent = 0.0;  // u * t0
    IntegralEstimate integral;
};

IntegralEstimate scaled(const IntegralEstimate& est, double factor) {
    return {est.value * factor, est.error_estimate * std::abs(factor), est.evaluations};
}

Reduced reduce(const KernelArgs& args, int power, const QuadratureSettings& settings) {
    args.validate();
    settings.validate();
    Reduced r;
    r.u = args.zeta * args.H / c_light;
    // u t0 = H sqrt(4 zeta^2 / c^2 + Q^2), evaluated without forming rho.
    r.exponent = args.H * std::hypot(2.0 * args.zeta / c_light, args.Q);
    if (r.exponent > kUnderflowExponent) {
        return r;
    }
    const double t0 = std::hypot(2.0, c_light * args.Q / args.zeta);
    r.integral = kernel_detail::reduced_integral(r.u, t0, power, settings);
    return r;
}

}  // namespace

void KernelArgs::validate() const {
    if (!(H > 0.0) || !std::isfinite(H)) {
        throw DomainError("kernel requires gap H > 0");
    }
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        throw DomainError("kernel requires zeta > 0");
    }
    if (!(Q >= 0.0) || !std::isfinite(Q)) {
        throw DomainError("kernel requires Q >= 0");
    }
}

namespace kernel_detail {

IntegralEstimate reduced_integral(double u, double t0, int power, const QuadratureSettings& settings) {
    if (!(u > 0.0) || !(t0 >= 2.0) || (power != 2 && power != 3)) {
        throw DomainError("reduced kernel integral requires u > 0, t0 >= 2, power in {2, 3}");
    }
    const double inv_u = 1.0 / u;
    const PanelIntegrand integrand = [t0, inv_u, power](std::span<const double> s, std::span<double> out) {
        simd::gap_kernel_panel(s, out, t0, inv_u, power);
    };
    return integrate_semi_infinite(integrand, 0.0, 1.0, settings);
}

}  // namespace kernel_detail

IntegralEstimate kernel_E(const KernelArgs& args, const QuadratureSettings& settings) {
    const Reduced r = reduce(args, 2, settings);
    if (r.exponent > kUnderflowExponent) {
        return {};
    }
    return scaled(r.integral, std::exp(-r.exponent) / r.u);
}

IntegralEstimate scaled_kernel(const KernelArgs& args, const QuadratureSettings& settings) {
    const Reduced r = reduce(args, 2, settings);
    if (r.exponent > kUnderflowExponent) {
        return {};
    }
    const double c_over_h = c_light / args.H;
    return scaled(r.integral, c_over_h * c_over_h * r.u * std::exp(-r.exponent));
}

IntegralEstimate kernel_E_gap_integrated(const KernelArgs& args, const QuadratureSettings& settings) {
    const Reduced r = reduce(args, 3, settings);
    if (r.exponent > kUnderflowExponent) {
        return {};
    }
    return scaled(r.integral, (c_light / args.zeta) * std::exp(-r.exponent) / r.u);
}

IntegralEstimate scaled_gap_kernel(const KernelArgs& args, const QuadratureSettings& settings) {
    const Reduced r = reduce(args, 3, settings);
    if (r.exponent > kUnderflowExponent) {
        return {};
    }
    return scaled(r.integral, (c_light * c_light / args.H) * std::exp(-r.exponent));
}

}  // namespace casimir
