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
#include <stdexcept>
#include <string>

namespace casimir {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (negative frequency, plasma permittivity at zero frequency, f outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// Result of a numerical integration or series summation.
struct IntegralEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Thrown when an adaptive quadrature or series runs out of budget before the
/// requested tolerance is met. The partial estimate is preserved.
class ConvergenceFailure : public std::runtime_error {
 public:
    ConvergenceFailure(const std::string& what, IntegralEstimate partial)
        : std::runtime_error(what), partial_(partial) {}

    const IntegralEstimate& partial() const noexcept { return partial_; }

 private:
    IntegralEstimate partial_;
};

}  // namespace casimir
