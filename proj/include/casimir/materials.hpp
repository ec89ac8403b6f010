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

#include <string>
#include <string_view>
#include <variant>

namespace casimir {

/// Fixed CODATA values used throughout the library.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;  // J s
    static constexpr double c = 2.99792458e8;        // m / s
};

namespace material {

struct Vacuum {
    bool operator==(const Vacuum&) const = default;
};

struct Constant {
    double epsilon = 1.0;
    bool operator==(const Constant&) const = default;
};

/// epsilon(i zeta) = 1 + omega_p^2 / zeta^2
struct Plasma {
    double omega_p = 0.0;
    bool operator==(const Plasma&) const = default;
};

/// epsilon(i zeta) = 1 + omega_p^2 / (zeta^2 + omega_0^2)
struct DrudeLorentz {
    double omega_p = 0.0;
    double omega_0 = 0.0;
    bool operator==(const DrudeLorentz&) const = default;
};

}  // namespace material

/// Permittivity model on the imaginary frequency axis.
using DielectricModel =
    std::variant<material::Vacuum, material::Constant, material::Plasma, material::DrudeLorentz>;

/// Checks model parameters; throws DomainError.
void validate(const DielectricModel& model);

/// epsilon(i zeta). Throws DomainError for zeta < 0, and for Plasma at zeta == 0.
double permittivity(const DielectricModel& model, double zeta);

/// Clausius-Mossotti contrast 3(eps - 1)/(eps + 2), finite for every zeta >= 0.
/// The Plasma value at zeta == 0 is the limit 3.
double cm_ratio(const DielectricModel& model, double zeta);

/// Resolves "gold", "silicon", "air" and "const:<eps>".
DielectricModel material_by_name(std::string_view name);

std::string describe(const DielectricModel& model);

namespace presets {
inline constexpr double gold_omega_p = 1.37e16;
inline constexpr double silicon_omega_0 = 6.6e15;
inline constexpr double silicon_omega_p = 3.3 * silicon_omega_0;

inline DielectricModel gold() { return material::Plasma{gold_omega_p}; }
inline DielectricModel silicon() { return material::DrudeLorentz{silicon_omega_p, silicon_omega_0}; }
inline DielectricModel air() { return material::Vacuum{}; }
}  // namespace presets

}  // namespace casimir
