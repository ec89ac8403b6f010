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

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Arguments of the gap kernel: transverse wavevector Q (rad/m, >= 0),
/// imaginary frequency zeta (rad/s, > 0) and gap H (m, > 0).
struct KernelArgs {
    double Q = 0.0;
    double zeta = 0.0;
    double H = 0.0;

    void validate() const;
};

/// E(Q) = int_1^inf dp (2p^4 - 2p^2 + 1) / w^3 exp(-(zeta H / c) w),
/// w = sqrt(4p^2 + (cQ/zeta)^2). Dimensionless.
IntegralEstimate kernel_E(const KernelArgs& args, const QuadratureSettings& settings);

/// zeta^2 E(Q). Stays finite as zeta -> 0 (tends to c^2 / (16 H^2) at Q = 0),
/// so this is the form integrated over zeta.
IntegralEstimate scaled_kernel(const KernelArgs& args, const QuadratureSettings& settings);

/// int_H^inf dH' E(Q; zeta, H'), with the H' integral done in closed form:
/// (c/zeta) int_1^inf dp (2p^4 - 2p^2 + 1) / w^4 exp(-(zeta H / c) w). Metres.
IntegralEstimate kernel_E_gap_integrated(const KernelArgs& args, const QuadratureSettings& settings);

/// zeta^2 times kernel_E_gap_integrated; finite as zeta -> 0.
IntegralEstimate scaled_gap_kernel(const KernelArgs& args, const QuadratureSettings& settings);

namespace kernel_detail {

/// Reduced form used by all four kernels. With u = zeta H / c, rho = cQ/zeta,
/// t0 = sqrt(4 + rho^2) and t = t0 + s/u:
///
///   int_0^inf ds (2p^4 - 2p^2 + 1) / (4 p t^power) e^{-s},  p = sqrt(t^2 - rho^2) / 2
///
/// so that E = e^{-u t0} / u * reduced(power = 2) and the gap-integrated
/// kernel is (c/zeta) e^{-u t0} / u * reduced(power = 3).
IntegralEstimate reduced_integral(double u, double t0, int power, const QuadratureSettings& settings);

}  // namespace kernel_detail

}  // namespace casimir
