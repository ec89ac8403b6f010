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

// Test-only reference integrators. Deliberately independent of the library:
// plain composite Gauss-Legendre with nodes from Newton iteration, fixed
// panel layouts, no adaptivity, and the kernel evaluated in its original
// momentum variable p.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kC = 2.99792458e8;

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
inline Rule gauss_legendre(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

inline double composite(const std::function<double(double)>& f, const std::vector<double>& breaks,
                        const Rule& rule) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double c = 0.5 * (breaks[k] + breaks[k + 1]);
        const double h = 0.5 * (breaks[k + 1] - breaks[k]);
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel += rule.weights[i] * f(c + h * rule.nodes[i]);
        }
        total += h * panel;
    }
    return total;
}

/// Breakpoints lo, lo + first, lo + first*ratio, ... up to hi.
inline std::vector<double> geometric_breaks(double lo, double hi, double first, double ratio) {
    std::vector<double> b{lo};
    double step = first;
    double x = lo;
    while (x + step < hi) {
        x += step;
        b.push_back(x);
        step *= ratio;
    }
    b.push_back(hi);
    return b;
}

/// Direct momentum-space form of the gap kernel,
///   int_1^inf dp (2p^4 - 2p^2 + 1) / w^power exp(-u w),  w = sqrt(4p^2 + rho^2),
/// with u = zeta H / c and rho = c Q / zeta. power = 3 gives E(Q); power = 4
/// times c / zeta gives the H-integrated kernel.
inline double direct_kernel(double Q, double zeta, double H, int power) {
    static const Rule rule = gauss_legendre(20);
    const double u = zeta * H / kC;
    const double rho = kC * Q / zeta;
    const double w0 = std::sqrt(4.0 + rho * rho);
    // Truncate where exp(-u (w - w0)) < e^{-60}.
    const double d = 60.0 / u;
    const double p_max = 0.5 * std::sqrt(4.0 + 2.0 * w0 * d + d * d);
    const double scale = w0 / (4.0 * u);  // initial decay length in p
    const auto breaks = geometric_breaks(1.0, p_max, std::min({scale, 1.0, p_max - 1.0}) * 1e-3, 1.08);
    const double shift = u * w0;
    const auto f = [&](double p) {
        const double w = std::sqrt(4.0 * p * p + rho * rho);
        return (2.0 * p * p * p * p - 2.0 * p * p + 1.0) / std::pow(w, power) * std::exp(-(u * w - shift));
    };
    return std::exp(-shift) * composite(f, breaks, rule);
}

}  // namespace oracle
