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

#include "casimir/materials.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_frequency(double zeta) {
    if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
        throw DomainError("imaginary frequency must be finite and >= 0, got " + std::to_string(zeta));
    }
}

// 1 / (eps - 1), evaluated without forming eps so that the plasma limit
// zeta -> 0 stays finite. +inf for a model with no contrast.
double inverse_contrast(const DielectricModel& model, double zeta) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [](const material::Vacuum&) { return inf; },
                          [](const material::Constant& m) {
                              return m.epsilon == 1.0 ? inf : 1.0 / (m.epsilon - 1.0);
                          },
                          [zeta](const material::Plasma& m) {
                              const double x = zeta / m.omega_p;
                              return x * x;
                          },
                          [zeta](const material::DrudeLorentz& m) {
                              const double x = zeta / m.omega_p;
                              const double y = m.omega_0 / m.omega_p;
                              return x * x + y * y;
                          },
                      },
                      model);
}

}  // namespace

void validate(const DielectricModel& model) {
    std::visit(overloaded{
                   [](const material::Vacuum&) {},
                   [](const material::Constant& m) {
                       if (!(m.epsilon >= 1.0) || !std::isfinite(m.epsilon)) {
                           throw DomainError("constant permittivity must be finite and >= 1");
                       }
                   },
                   [](const material::Plasma& m) {
                       if (!(m.omega_p > 0.0) || !std::isfinite(m.omega_p)) {
                           throw DomainError("plasma frequency must be > 0");
                       }
                   },
                   [](const material::DrudeLorentz& m) {
                       if (!(m.omega_p > 0.0) || !(m.omega_0 > 0.0) || !std::isfinite(m.omega_p) ||
                           !std::isfinite(m.omega_0)) {
                           throw DomainError("Drude-Lorentz frequencies must be > 0");
                       }
                   },
               },
               model);
}

double permittivity(const DielectricModel& model, double zeta) {
    require_frequency(zeta);
    validate(model);
    return std::visit(overloaded{
                          [](const material::Vacuum&) { return 1.0; },
                          [](const material::Constant& m) { return m.epsilon; },
                          [zeta](const material::Plasma& m) {
                              if (zeta == 0.0) {
                                  throw DomainError("plasma permittivity diverges at zeta = 0");
                              }
                              const double x = m.omega_p / zeta;
                              return 1.0 + x * x;
                          },
                          [zeta](const material::DrudeLorentz& m) {
                              return 1.0 + m.omega_p * m.omega_p / (zeta * zeta + m.omega_0 * m.omega_0);
                          },
                      },
                      model);
}

double cm_ratio(const DielectricModel& model, double zeta) {
    require_frequency(zeta);
    validate(model);
    // 3 (eps - 1) / (eps + 2) == 3 / (1 + 3 / (eps - 1))
    return 3.0 / (1.0 + 3.0 * inverse_contrast(model, zeta));
}

DielectricModel material_by_name(std::string_view name) {
    if (name == "gold") {
        return presets::gold();
    }
    if (name == "silicon") {
        return presets::silicon();
    }
    if (name == "air" || name == "vacuum") {
        return presets::air();
    }
    constexpr std::string_view prefix = "const:";
    if (name.substr(0, prefix.size()) == prefix) {
        const std::string_view text = name.substr(prefix.size());
        double eps = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), eps);
        if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
            throw DomainError("malformed constant permittivity '" + std::string(name) + "'");
        }
        DielectricModel model = material::Constant{eps};
        validate(model);
        return model;
    }
    throw DomainError("unknown material '" + std::string(name) + "'");
}

std::string describe(const DielectricModel& model) {
    std::ostringstream out;
    out.precision(12);
    std::visit(overloaded{
                   [&](const material::Vacuum&) { out << "vacuum"; },
                   [&](const material::Constant& m) { out << "const(" << m.epsilon << ")"; },
                   [&](const material::Plasma& m) { out << "plasma(wp=" << m.omega_p << ")"; },
                   [&](const material::DrudeLorentz& m) {
                       out << "drude-lorentz(wp=" << m.omega_p << ", w0=" << m.omega_0 << ")";
                   },
               },
               model);
    return out.str();
}

}  // namespace casimir
