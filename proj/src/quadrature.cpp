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

#include "casimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace casimir {

void QuadratureSettings::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(series_tail_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be > 0");
    }
    if (m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }
    if (max_subdivisions < 0) {
        throw DomainError("max_subdivisions must be >= 0");
    }
}

namespace quad {
namespace {

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452420, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
// Gauss weights for xgk[1], xgk[3], ..., xgk[9]
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

}  // namespace

void kronrod_nodes(double lo, double hi, std::span<double> out) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    out[0] = centre;
    for (std::size_t j = 0; j < 10; ++j) {
        out[1 + 2 * j] = centre - half * xgk[j];
        out[2 + 2 * j] = centre + half * xgk[j];
    }
}

RuleResult apply_rule(std::span<const double> fx, double half_width) {
    const double fc = fx[0];
    double resk = wgk[10] * fc;
    double resg = 0.0;
    double resabs = std::abs(resk);
    for (std::size_t j = 0; j < 10; ++j) {
        const double f1 = fx[1 + 2 * j];
        const double f2 = fx[2 + 2 * j];
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            resg += wg[j / 2] * (f1 + f2);
        }
    }
    const double mean = 0.5 * resk;
    double resasc = wgk[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j) {
        resasc += wgk[j] * (std::abs(fx[1 + 2 * j] - mean) + std::abs(fx[2 + 2 * j] - mean));
    }
    const double h = std::abs(half_width);
    return {resk * half_width, resg * half_width, resabs * h, resasc * h};
}

double panel_error(const RuleResult& r) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    double err = std::abs(r.kronrod - r.gauss);
    if (r.asc != 0.0 && err != 0.0) {
        err = r.asc * std::min(1.0, std::pow(200.0 * err / r.asc, 1.5));
    }
    if (r.abs_kronrod > tiny / (50.0 * eps)) {
        err = std::max(50.0 * eps * r.abs_kronrod, err);
    }
    return err;
}

std::vector<double> default_layout() {
    std::vector<double> layout{0.0};
    for (int k = -6; k <= 4; ++k) {
        layout.push_back(std::pow(10.0, k));
    }
    layout.push_back(std::numeric_limits<double>::infinity());
    return layout;
}

}  // namespace quad

namespace {

struct Panel {
    double lo = 0.0;  // y coordinates; hi may be +inf
    double hi = 0.0;
    double value = 0.0;
    double error = 0.0;
};

class AdaptiveEngine {
 public:
    AdaptiveEngine(const PanelIntegrand& f, double origin, double scale)
        : f_(f), origin_(origin), scale_(scale) {}

    Panel evaluate(double lo, double hi) {
        std::array<double, quad::kronrod_points> t{};
        std::array<double, quad::kronrod_points> x{};
        std::array<double, quad::kronrod_points> fx{};
        double half_width = 0.0;
        if (std::isinf(hi)) {
            // y = lo + (1 - t) / t, t in (0, 1]; dy = dt / t^2
            quad::kronrod_nodes(0.0, 1.0, t);
            for (std::size_t i = 0; i < t.size(); ++i) {
                x[i] = origin_ + scale_ * (lo + (1.0 - t[i]) / t[i]);
            }
            f_(x, fx);
            for (std::size_t i = 0; i < t.size(); ++i) {
                fx[i] = fx[i] == 0.0 ? 0.0 : fx[i] * scale_ / (t[i] * t[i]);
            }
            half_width = 0.5;
        } else {
            quad::kronrod_nodes(lo, hi, t);
            for (std::size_t i = 0; i < t.size(); ++i) {
                x[i] = origin_ + scale_ * t[i];
            }
            f_(x, fx);
            for (double& v : fx) {
                v *= scale_;
            }
            half_width = 0.5 * (hi - lo);
        }
        evaluations_ += quad::kronrod_points;
        for (double v : fx) {
            if (!std::isfinite(v)) {
                throw DomainError("integrand is not finite on the integration panel");
            }
        }
        const quad::RuleResult r = quad::apply_rule(fx, half_width);
        return {lo, hi, r.kronrod, quad::panel_error(r)};
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

 private:
    const PanelIntegrand& f_;
    double origin_;
    double scale_;
    std::size_t evaluations_ = 0;
};

IntegralEstimate totals(const std::vector<Panel>& panels, std::size_t evaluations) {
    IntegralEstimate est;
    for (const Panel& p : panels) {
        est.value += p.value;
        est.error_estimate += p.error;
    }
    est.evaluations = evaluations;
    return est;
}

IntegralEstimate adaptive(const PanelIntegrand& f, double origin, double scale,
                          std::span<const double> layout, const QuadratureSettings& settings) {
    settings.validate();
    AdaptiveEngine engine(f, origin, scale);
    std::vector<Panel> panels;
    panels.reserve(layout.size() + static_cast<std::size_t>(settings.max_subdivisions) + 1);
    for (std::size_t i = 0; i + 1 < layout.size(); ++i) {
        panels.push_back(engine.evaluate(layout[i], layout[i + 1]));
    }

    int subdivisions = 0;
    while (true) {
        IntegralEstimate est = totals(panels, engine.evaluations());
        const double target = std::max(settings.rel_tol * std::abs(est.value), settings.abs_tol);
        if (est.error_estimate <= target) {
            return est;
        }
        if (subdivisions >= settings.max_subdivisions) {
            throw ConvergenceFailure("adaptive quadrature exhausted " +
                                         std::to_string(settings.max_subdivisions) +
                                         " subdivisions (error " + std::to_string(est.error_estimate) +
                                         " > target " + std::to_string(target) + ")",
                                     est);
        }
        auto worst = std::max_element(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) {
            return a.error < b.error;
        });
        const double lo = worst->lo;
        const double hi = worst->hi;
        const double mid = std::isinf(hi) ? lo + 1.0 + std::max(lo, 0.0) : 0.5 * (lo + hi);
        *worst = engine.evaluate(lo, mid);
        panels.insert(worst + 1, engine.evaluate(mid, hi));
        ++subdivisions;
    }
}

}  // namespace

IntegralEstimate integrate_semi_infinite(const PanelIntegrand& f, double a, double decay_scale,
                                         const QuadratureSettings& settings,
                                         std::span<const double> layout) {
    if (!(decay_scale > 0.0) || !std::isfinite(decay_scale) || !std::isfinite(a)) {
        throw DomainError("integrate_semi_infinite requires finite a and decay_scale > 0");
    }
    if (layout.empty()) {
        static const std::vector<double> standard = quad::default_layout();
        return adaptive(f, a, decay_scale, standard, settings);
    }
    if (layout.front() != 0.0 || !std::isinf(layout.back()) || !std::is_sorted(layout.begin(), layout.end())) {
        throw DomainError("panel layout must be sorted and span [0, inf]");
    }
    return adaptive(f, a, decay_scale, layout, settings);
}

IntegralEstimate integrate_semi_infinite(const ScalarIntegrand& f, double a, double decay_scale,
                                         const QuadratureSettings& settings) {
    const PanelIntegrand batched = [&f](std::span<const double> x, std::span<double> fx) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            fx[i] = f(x[i]);
        }
    };
    return integrate_semi_infinite(batched, a, decay_scale, settings);
}

IntegralEstimate integrate_interval(const ScalarIntegrand& f, double lo, double hi,
                                    const QuadratureSettings& settings) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
        throw DomainError("integrate_interval requires finite lo < hi");
    }
    const PanelIntegrand batched = [&f](std::span<const double> x, std::span<double> fx) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            fx[i] = f(x[i]);
        }
    };
    const std::array<double, 2> layout = {0.0, hi - lo};
    return adaptive(batched, lo, 1.0, layout, settings);
}

PrimedSeries::PrimedSeries(const QuadratureSettings& settings)
    : tail_tol_(settings.series_tail_tol), abs_tol_(settings.abs_tol) {}

void PrimedSeries::add(int m, double term) {
    if (m != last_index_ + 1) {
        throw DomainError("primed series terms must be added in order");
    }
    last_index_ = m;
    if (m == 0) {
        sum_ = 0.5 * term;
        last_[1] = std::abs(0.5 * term);
        return;
    }
    sum_ += term;
    last_[0] = last_[1];
    last_[1] = std::abs(term);
    if (std::abs(term) <= std::max(tail_tol_ * std::abs(sum_), abs_tol_)) {
        ++quiet_run_;
    } else {
        quiet_run_ = 0;
    }
}

SeriesEstimate PrimedSeries::estimate() const {
    SeriesEstimate est;
    est.value = sum_;
    est.error_estimate = last_index_ >= 1 ? last_[0] + last_[1] : last_[1];
    est.evaluations = static_cast<std::size_t>(last_index_ + 1);
    est.last_index = last_index_;
    return est;
}

SeriesEstimate sum_primed_series(const std::function<double(int)>& term,
                                 const QuadratureSettings& settings) {
    settings.validate();
    PrimedSeries series(settings);
    for (int m = 0; m <= settings.m_max; ++m) {
        series.add(m, term(m));
        if (series.converged()) {
            return series.estimate();
        }
    }
    const SeriesEstimate partial = series.estimate();
    throw ConvergenceFailure("primed series did not meet the tail criterion by m_max = " +
                                 std::to_string(settings.m_max),
                             partial);
}

}  // namespace casimir
