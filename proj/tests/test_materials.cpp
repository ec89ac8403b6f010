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
#include <random>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "doctest.h"

using namespace casimir;

TEST_CASE("permittivity of the analytic models") {
    CHECK(permittivity(material::Plasma{1.37e16}, 1.37e16) == doctest::Approx(2.0).epsilon(1e-15));
    for (double zeta : {0.0, 1e10, 3.3e15, 1e20}) {
        CHECK(permittivity(material::Vacuum{}, zeta) == 1.0);
        CHECK(permittivity(material::Constant{7.5}, zeta) == 7.5);
    }
    const DielectricModel si = material::DrudeLorentz{3.3 * 6.6e15, 6.6e15};
    CHECK(permittivity(si, 0.0) == doctest::Approx(11.89).epsilon(1e-14));
    CHECK(permittivity(presets::silicon(), 0.0) == doctest::Approx(11.89).epsilon(1e-14));
}

TEST_CASE("permittivity domain errors") {
    CHECK_THROWS_AS(permittivity(material::Plasma{1.37e16}, 0.0), DomainError);
    CHECK_THROWS_AS(permittivity(material::Vacuum{}, -1.0), DomainError);
    CHECK_THROWS_AS(permittivity(material::Constant{0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(permittivity(material::Plasma{-1.0}, 1.0), DomainError);
    CHECK_THROWS_AS(permittivity(material::DrudeLorentz{1e16, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS(cm_ratio(presets::gold(), -1e10), DomainError);
    CHECK_THROWS_AS(cm_ratio(presets::gold(), std::nan("")), DomainError);
}

TEST_CASE("Clausius-Mossotti ratio examples") {
    CHECK(cm_ratio(material::Vacuum{}, 1e15) == 0.0);
    CHECK(cm_ratio(material::Constant{4.0}, 2e15) == 1.5);
    CHECK(cm_ratio(material::Constant{1.0}, 2e15) == 0.0);
    // zeta -> 0+ limit for a plasma; the value at zeta = 0 itself is the limit
    CHECK(cm_ratio(presets::gold(), 0.0) == 3.0);
    CHECK(cm_ratio(presets::gold(), 1e3) == doctest::Approx(3.0).epsilon(1e-15));
    // agrees with the textbook form where eps is representable
    for (double zeta : {1e13, 1e15, 1.37e16, 1e17}) {
        const double eps = permittivity(presets::gold(), zeta);
        CHECK(cm_ratio(presets::gold(), zeta) == doctest::Approx(3.0 * (eps - 1.0) / (eps + 2.0)).epsilon(1e-14));
        const double eps_si = permittivity(presets::silicon(), zeta);
        CHECK(cm_ratio(presets::silicon(), zeta) ==
              doctest::Approx(3.0 * (eps_si - 1.0) / (eps_si + 2.0)).epsilon(1e-14));
    }
}

TEST_CASE("cm_ratio is bounded and monotone") {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> log_zeta(8.0, 20.0);
    const DielectricModel models[] = {presets::gold(), presets::silicon(), presets::air(), material::Constant{11.0}};
    for (int i = 0; i < 2000; ++i) {
        const double zeta = std::pow(10.0, log_zeta(rng));
        for (const auto& m : models) {
            const double r = cm_ratio(m, zeta);
            CHECK(r >= 0.0);
            CHECK(r < 3.0);
        }
    }
    double previous = 3.0;
    for (double lz = 8.0; lz <= 20.0; lz += 0.01) {
        const double r = cm_ratio(presets::gold(), std::pow(10.0, lz));
        CHECK(r <= previous);
        previous = r;
    }
    // Strict decrease once the ratio leaves its perfect-conductor plateau.
    CHECK(cm_ratio(presets::gold(), 1e17) < cm_ratio(presets::gold(), 1e16));
    CHECK(cm_ratio(presets::gold(), 1e16) < cm_ratio(presets::gold(), 1e15));
}

TEST_CASE("constant model is frequency independent") {
    const DielectricModel m = material::Constant{4.0};
    const double r0 = cm_ratio(m, 0.0);
    for (double zeta = 1.0; zeta < 1e20; zeta *= 7.3) {
        CHECK(cm_ratio(m, zeta) == r0);
    }
}

TEST_CASE("Drude-Lorentz permittivity tends to one") {
    const auto si = presets::silicon();
    double previous = permittivity(si, 0.0);
    for (double zeta = 1e12; zeta < 1e22; zeta *= 3.0) {
        const double eps = permittivity(si, zeta);
        CHECK(eps >= 1.0);
        CHECK(eps <= previous);
        previous = eps;
        if (zeta >= 1e4 * presets::silicon_omega_p) {
            CHECK(std::abs(eps - 1.0) < 1e-6);
        }
    }
    double prev_gold = permittivity(presets::gold(), 1e10);
    for (double zeta = 1e11; zeta < 1e22; zeta *= 3.0) {
        const double eps = permittivity(presets::gold(), zeta);
        CHECK(eps >= 1.0);
        CHECK(eps <= prev_gold);
        prev_gold = eps;
    }
}

TEST_CASE("material names") {
    CHECK(material_by_name("gold") == presets::gold());
    CHECK(material_by_name("silicon") == presets::silicon());
    CHECK(material_by_name("air") == presets::air());
    CHECK(std::get<material::Plasma>(material_by_name("gold")).omega_p == 1.37e16);
    const auto si = std::get<material::DrudeLorentz>(material_by_name("silicon"));
    CHECK(si.omega_p == doctest::Approx(2.178e16).epsilon(1e-15));
    CHECK(si.omega_0 == 6.6e15);
    CHECK(std::get<material::Constant>(material_by_name("const:4.5")).epsilon == 4.5);
    CHECK_THROWS_AS(material_by_name("const:"), DomainError);
    CHECK_THROWS_AS(material_by_name("const:abc"), DomainError);
    CHECK_THROWS_AS(material_by_name("const:0.5"), DomainError);
    CHECK_THROWS_AS(material_by_name("copper"), DomainError);
}
