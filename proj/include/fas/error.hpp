// SPDX-License-Identifier: Apache-2.0
//
// fas-extremes: outage analysis for continuous-aperture fluid antenna systems
// Copyright (C) 2026 The fas-extremes authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace fas {

// Argument outside the mathematical domain of a function (negative order,
// non-finite input, singular point).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid configuration: out-of-range sizes, ranks, block counts.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Iterative method failed to converge, or a factorization broke down.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(double x, const char *what)
{
    if (!(x - x == 0.0))
        throw DomainError(std::string(what) + ": non-finite argument");
}

} // namespace detail
} // namespace fas
