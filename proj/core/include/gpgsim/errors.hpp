// Copyright 2026 The gpgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPGSIM_ERRORS_HPP
#define GPGSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpgsim {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateEstimatorError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidSignalError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature did not reach the requested relative error.
struct QuadratureFailure : std::runtime_error {
    QuadratureFailure(const std::string &what, double value, double error_estimate, int panels)
        : std::runtime_error(what), value(value), error_estimate(error_estimate), panels(panels) {
    }
    double value;
    double error_estimate;
    int panels;
};

/// Fock-space truncation too small; `leakage` is the measured top-level weight.
struct TruncationError : std::runtime_error {
    TruncationError(const std::string &what, double leakage) : std::runtime_error(what), leakage(leakage) {
    }
    double leakage;
};

}  // namespace gpgsim

#endif
