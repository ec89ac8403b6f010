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
#include <functional>
#include <span>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

/// Convergence contract shared by every integral and harmonic series.
struct QuadratureSettings {
    double rel_tol = 1e-8;
    double abs_tol = 1e-300;
    int max_subdivisions = 60;
    int m_max = 512;
    double series_tail_tol = 1e-10;

    void validate() const;
};

/// Evaluates an integrand at a batch of abscissae: fx[i] = f(x[i]).
using PanelIntegrand = std::function<void(std::span<const double> x, std::span<double> fx)>;
using ScalarIntegrand = std::function<double(double)>;

namespace quad {

/// 21-point Kronrod rule with embedded 10-point Gauss rule on [-1, 1].
/// Nodes are ordered so that node 0 is the centre, followed by +/- pairs.
inline constexpr std::size_t kronrod_points = 21;

struct RuleResult {
    double kronrod = 0.0;
    double gauss = 0.0;
    double abs_kronrod = 0.0;  // integral of |f|
    double asc = 0.0;          // integral of |f - mean|
};

/// Applies the G10/K21 pair to fx sampled at kronrod_nodes(lo, hi) order.
RuleResult apply_rule(std::span<const double> fx, double half_width);

/// The 21 abscissae of the rule mapped onto [lo, hi].
void kronrod_nodes(double lo, double hi, std::span<double> out);

/// QUADPACK-style error estimate from one panel's rule result.
double panel_error(const RuleResult& r);

/// Breakpoints (in units of the decay scale) of the initial logarithmic
/// panel layout: 0, 1e-6, 1e-5, ..., 1e4, infinity.
std::vector<double> default_layout();

}  // namespace quad

/// Integral of f over [a, infinity). With x = a + L y (L = decay_scale) the
/// y half line starts from a logarithmic panel layout; finite panels use the
/// rule directly, the unbounded last panel is mapped through y = y0 + (1 - t)/t.
/// Global adaptive bisection refines the worst panel. Only interior points
/// are sampled, never x = a or infinity.
/// Throws ConvergenceFailure with the partial estimate if max_subdivisions
/// bisections do not meet max(rel_tol |I|, abs_tol).
IntegralEstimate integrate_semi_infinite(const ScalarIntegrand& f, double a, double decay_scale,
                                         const QuadratureSettings& settings);

/// Batched form; the integrand receives all 21 nodes of a panel at once.
IntegralEstimate integrate_semi_infinite(const PanelIntegrand& f, double a, double decay_scale,
                                         const QuadratureSettings& settings,
                                         std::span<const double> layout = {});

/// Global adaptive G10/K21 on a finite interval [lo, hi].
IntegralEstimate integrate_interval(const ScalarIntegrand& f, double lo, double hi,
                                    const QuadratureSettings& settings);

struct SeriesEstimate : IntegralEstimate {
    int last_index = 0;  // index of the final term included
};

/// Tail criterion of the primed harmonic series: stop after two consecutive
/// terms satisfy |t_m| <= max(series_tail_tol |S|, abs_tol).
class PrimedSeries {
 public:
    explicit PrimedSeries(const QuadratureSettings& settings);

    /// Adds term m; m = 0 enters with half weight. Terms must arrive in order.
    void add(int m, double term);

    bool converged() const noexcept { return quiet_run_ >= 2; }
    SeriesEstimate estimate() const;

 private:
    double tail_tol_;
    double abs_tol_;
    double sum_ = 0.0;
    double last_[2] = {0.0, 0.0};
    int quiet_run_ = 0;
    int last_index_ = -1;
};

/// 1/2 term(0) + sum_{m >= 1} term(m), truncated by the PrimedSeries tail test.
/// Throws ConvergenceFailure if m_max is reached first.
SeriesEstimate sum_primed_series(const std::function<double(int)>& term,
                                 const QuadratureSettings& settings);

}  // namespace casimir
