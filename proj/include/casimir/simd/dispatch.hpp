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

#include <span>

namespace casimir::simd {

enum class Isa { Scalar, Avx2 };

/// True if the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

/// The variant used by the dispatching entry points. Chosen once at start-up
/// (best supported ISA, unless CASIMIR_SIMD=scalar is set in the environment).
Isa active_isa();

/// Overrides the dispatch choice; throws std::invalid_argument if unsupported.
void set_active_isa(Isa isa);

const char* isa_name(Isa isa);

/// Integrand of the reduced gap kernel on a batch of points s >= 0:
///
///   out[i] = (2P^2 - 2P + 1) / (4 sqrt(P) t^power) * exp(-s[i])
///   delta  = s[i] * inv_u,   t = t0 + delta,   P = 1 + delta (2 t0 + delta) / 4
///
/// P is p^2 of the momentum integral, written so that no t^2 - rho^2
/// cancellation occurs. power is 2 (kernel) or 3 (gap-integrated kernel).
void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power);

namespace scalar {
void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power);
void exp(std::span<const double> x, std::span<double> out);
}  // namespace scalar

#if defined(CASIMIR_HAVE_AVX2)
namespace avx2 {
void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power);
/// Vectorised exp, accurate to about 1 ulp; 0 below -745, +inf above 709.78.
void exp(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace casimir::simd
