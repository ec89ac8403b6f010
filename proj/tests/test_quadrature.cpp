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
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casimir;

namespace {

// int_1^inf (2p^4 - 2p^2 + 1) / (8 p^3) e^{-2p} dp, from a 40-digit mpmath
// evaluation made before the implementation existed.
constexpr double kKernelAtUnitGap = 0.01691691040457658648674993687156;

double kernel_integrand(double p) { return (2 * p - 2 / p + 1 / (p * p * p)) / 8 * std::exp(-2 * p); }

struct Case {
    const char* name;
    ScalarIntegrand f;
    double a;
    double scale;
    double exact;
};

// Integrands on [a, inf) with closed-form (or independently frozen) values.
std::vector<Case> reference_cases() {
    const double gompertz = 0.59634736232319407434;  // e E1(1)
    return {
        {"exp", [](double x) { return std::exp(-x); }, 0.0, 1.0, 1.0},
        {"x exp(-2x)", [](double x) { return std::exp(std::log(x) - 2 * x); }, 0.0, 0.5, 0.25},
        {"x^2 exp(-x)", [](double x) { return std::exp(2 * std::log(x) - x); }, 0.0, 1.0, 2.0},
        {"gaussian", [](double x) { return std::exp(-x * x); }, 0.0, 1.0, std::sqrt(std::numbers::pi) / 2},
        {"exp(-3x) cos x", [](double x) { return std::exp(-3 * x) * std::cos(x); }, 0.0, 1.0 / 3, 0.3},
        {"exp(-x) sin x", [](double x) { return std::exp(-x) * std::sin(x); }, 0.0, 1.0, 0.5},
        {"exp(-x)/(1+x)", [](double x) { return std::exp(-x) / (1 + x); }, 0.0, 1.0, gompertz},
        {"shifted exp", [](double x) { return std::exp(-x); }, 2.0, 1.0, std::exp(-2.0)},
        {"x exp(-x) from 1", [](double x) { return std::exp(std::log(x) - x); }, 1.0, 1.0, 2.0 / std::exp(1.0)},
        {"slow exp", [](double x) { return std::exp(-x / 5); }, 0.0, 5.0, 5.0},
        {"fast exp", [](double x) { return std::exp(-100 * x); }, 0.0, 0.01, 0.01},
        {"x^3 exp(-x)", [](double x) { return std::exp(3 * std::log(x) - x); }, 0.0, 1.0, 6.0},
        {"(1+x/2)^2 exp(-x)", [](double x) { return std::exp(2 * std::log1p(x / 2) - x); }, 0.0, 1.0, 2.5},
        {"exp(-2x) cosh x", [](double x) { return 0.5 * (std::exp(-x) + std::exp(-3 * x)); }, 0.0, 1.0, 2.0 / 3},
        {"x exp(-x^2)", [](double x) { return std::exp(std::log(x) - x * x); }, 0.0, 1.0, 0.5},
        {"exp(-x) log(1+x)", [](double x) { return std::exp(-x) * std::log1p(x); }, 0.0, 1.0, gompertz},
        {"x^5 exp(-x)", [](double x) { return std::exp(5 * std::log(x) - x); }, 0.0, 1.0, 120.0},
        {"sech", [](double x) { return 1.0 / std::cosh(x); }, 0.0, 1.0, std::numbers::pi / 2},
        {"tiny scale", [](double x) { return 1e9 * std::exp(-1e9 * x); }, 0.0, 1e-9, 1.0},
        {"gap kernel", kernel_integrand, 1.0, 0.5, kKernelAtUnitGap},
    };
}

}  // namespace

TEST_CASE("Kronrod rule integrates polynomials exactly") {
    // K21 is exact to degree 31, the embedded G10 to degree 19.
    std::vector<double> x(quad::kronrod_points), fx(quad::kronrod_points);
    quad::kronrod_nodes(-1.0, 1.0, x);
    for (int degree = 0; degree <= 31; ++degree) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            fx[i] = std::pow(x[i], degree);
        }
        const auto r = quad::apply_rule(fx, 1.0);
        const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
        CHECK(r.kronrod == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
        if (degree <= 19) {
            CHECK(r.gauss == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
        }
    }
}

TEST_CASE("frozen reference value agrees with the test-side fixed-panel oracle") {
    // Composite 20-point Gauss-Legendre with panel doubling as an extra
    // sanity check of the frozen constant.
    const auto rule = oracle::gauss_legendre(20);
    const auto coarse = oracle::composite(kernel_integrand, oracle::geometric_breaks(1.0, 40.0, 0.01, 1.2), rule);
    const auto fine = oracle::composite(kernel_integrand, oracle::geometric_breaks(1.0, 40.0, 0.005, 1.1), rule);
    CHECK(std::abs(fine - coarse) < 1e-16);
    CHECK(fine == doctest::Approx(kKernelAtUnitGap).epsilon(1e-14));
}

TEST_CASE("semi-infinite integration examples") {
    QuadratureSettings s;
    const auto e1 = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, 1.0, s);
    CHECK(std::abs(e1.value - 1.0) <= s.rel_tol);
    CHECK(e1.error_estimate >= 0.0);
    CHECK(e1.evaluations > 0);
    const auto e2 = integrate_semi_infinite([](double x) { return x * std::exp(-2 * x); }, 0.0, 0.5, s);
    CHECK(std::abs(e2.value - 0.25) <= 0.25 * s.rel_tol);
    const auto e3 = integrate_semi_infinite(kernel_integrand, 1.0, 0.5, s);
    CHECK(std::abs(e3.value - kKernelAtUnitGap) <= kKernelAtUnitGap * s.rel_tol);
}

TEST_CASE("reference set meets the requested tolerance") {
    for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
        QuadratureSettings s;
        s.rel_tol = tol;
        for (const Case& c : reference_cases()) {
            CAPTURE(std::string(c.name));
            CAPTURE(tol);
            const auto est = integrate_semi_infinite(c.f, c.a, c.scale, s);
            CHECK(std::abs(est.value - c.exact) <= std::max(tol * std::abs(c.exact), 1e-15));
            CHECK(std::abs(est.value - c.exact) <= est.error_estimate + 4e-16 * std::abs(c.exact));
        }
    }
}

TEST_CASE("halving rel_tol never increases the discrepancy") {
    for (const Case& c : reference_cases()) {
        CAPTURE(std::string(c.name));
        double previous = INFINITY;
        for (double tol = 1e-3; tol > 1e-13; tol *= 0.5) {
            QuadratureSettings s;
            s.rel_tol = tol;
            const double disc = std::abs(integrate_semi_infinite(c.f, c.a, c.scale, s).value - c.exact);
            CAPTURE(tol);
            // A few ulps of summation noise are allowed once the error is at roundoff level.
            CHECK(disc <= previous + 8e-16 * std::abs(c.exact));
            previous = disc;
        }
    }
}

TEST_CASE("integration is linear") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    const auto cases = reference_cases();
    QuadratureSettings s;
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Case& f = cases[trial % cases.size()];
        const Case& g = cases[(7 * trial + 3) % cases.size()];
        // The decay scale is a hint; both integrands must live on comparable scales.
        if (f.a != g.a || std::max(f.scale, g.scale) > 10.0 * std::min(f.scale, g.scale)) {
            continue;
        }
        const double alpha = coef(rng);
        const double beta = coef(rng);
        const double scale = std::min(f.scale, g.scale);
        const auto rf = integrate_semi_infinite(f.f, f.a, scale, s);
        const auto rg = integrate_semi_infinite(g.f, g.a, scale, s);
        const auto rfg = integrate_semi_infinite(
            [&](double x) { return alpha * f.f(x) + beta * g.f(x); }, f.a, scale, s);
        const double combined = std::abs(alpha) * rf.error_estimate + std::abs(beta) * rg.error_estimate +
                                rfg.error_estimate;
        CAPTURE(std::string(f.name));
        CAPTURE(std::string(g.name));
        CHECK(std::abs(rfg.value - (alpha * rf.value + beta * rg.value)) <= 2.0 * combined);
        ++compared;
    }
    CHECK(compared >= 50);
}

TEST_CASE("open rule never samples the endpoint") {
    QuadratureSettings s;
    bool touched = false;
    const auto est = integrate_semi_infinite(
        [&](double x) {
            if (x <= 0.0) {
                touched = true;
            }
            return x > 0.0 ? std::sin(x) / x * std::exp(-x) : NAN;
        },
        0.0, 1.0, s);
    CHECK_FALSE(touched);
    CHECK(est.value == doctest::Approx(std::numbers::pi / 4).epsilon(1e-8));
}

TEST_CASE("finite interval integration") {
    QuadratureSettings s;
    const auto est = integrate_interval([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2, s);
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(integrate_interval([](double) { return 1.0; }, 1.0, 0.0, s), DomainError);
}

TEST_CASE("convergence failure keeps the partial estimate") {
    QuadratureSettings s;
    s.rel_tol = 1e-15;
    s.max_subdivisions = 0;
    try {
        integrate_semi_infinite([](double x) { return std::exp(-x) * std::cos(40 * x); }, 0.0, 1.0, s);
        FAIL("expected ConvergenceFailure");
    } catch (const ConvergenceFailure& e) {
        CHECK(e.partial().evaluations > 0);
        CHECK(e.partial().error_estimate > 0.0);
        CHECK(std::abs(e.partial().value - 1.0 / 1601.0) < 1.0);
    }
}

TEST_CASE("argument validation") {
    QuadratureSettings s;
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, 0.0, s), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, -1.0, s), DomainError);
    s.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, 1.0, s), DomainError);
    QuadratureSettings bad;
    bad.m_max = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return NAN; }, 0.0, 1.0, QuadratureSettings{}), DomainError);
}

TEST_CASE("primed series examples") {
    QuadratureSettings s;
    const auto geo = sum_primed_series([](int m) { return std::pow(0.5, m); }, s);
    CHECK(geo.value == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(geo.last_index > 30);

    const auto half = sum_primed_series([](int m) { return m == 0 ? 2.0 : 0.0; }, s);
    CHECK(half.value == 1.0);
    CHECK(half.last_index == 2);

    // Brute-force partial sum to m = 200, frozen from an mpmath evaluation.
    const double brute = 0.38079707797788244406;
    double direct = 0.5;
    for (int m = 1; m <= 200; ++m) {
        direct += std::cos(2 * std::numbers::pi * m * 0.25) * std::exp(-m);
    }
    CHECK(direct == doctest::Approx(brute).epsilon(1e-15));
    const auto osc = sum_primed_series(
        [](int m) { return std::cos(2 * std::numbers::pi * m * 0.25) * std::exp(-m); }, s);
    CHECK(osc.value == doctest::Approx(brute).epsilon(1e-10));
}

TEST_CASE("primed series of finite support is exact") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_int_distribution<int> length(1, 40);
    QuadratureSettings s;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> terms(length(rng));
        for (double& t : terms) {
            t = value(rng);
        }
        double exact = 0.5 * terms[0];
        for (std::size_t m = 1; m < terms.size(); ++m) {
            exact += terms[m];
        }
        const auto est = sum_primed_series(
            [&](int m) { return m < static_cast<int>(terms.size()) ? terms[m] : 0.0; }, s);
        CHECK(est.value == doctest::Approx(exact).epsilon(1e-15).scale(1.0));
    }
}

TEST_CASE("isolated zero terms do not truncate the series") {
    // f = 0.5 style: every even term vanishes.
    QuadratureSettings s;
    const auto est = sum_primed_series([](int m) { return m % 2 == 0 && m > 0 ? 0.0 : std::pow(0.9, m); }, s);
    double exact = 0.5;
    for (int m = 1; m < 2000; m += 2) {
        exact += std::pow(0.9, m);
    }
    CHECK(est.value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("primed series convergence failure") {
    QuadratureSettings s;
    s.m_max = 20;
    CHECK_THROWS_AS(sum_primed_series([](int m) { return 1.0 / (1.0 + m); }, s), ConvergenceFailure);
    try {
        sum_primed_series([](int) { return 1.0; }, s);
    } catch (const ConvergenceFailure& e) {
        CHECK(e.partial().value == doctest::Approx(20.5));
    }
}
