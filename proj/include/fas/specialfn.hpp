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

#include <numbers>
#include <vector>

namespace fas::special {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double euler_gamma = std::numbers::egamma;

// Bessel function of the first kind, order 0 and 1.
// Power series for |x| <= 12, Hankel asymptotic expansion beyond.
double bessel_j0(double x);
double bessel_j1(double x);

double erf(double x);

// E1(x) = int_1^inf exp(-x t) / t dt, x > 0.
double exp_integral_e1(double x);

// exp(x) * E1(x); finite for all x > 0 where E1 itself underflows.
double exp_integral_e1_scaled(double x);

// Modified Bessel I0, and exp(-|x|) * I0(x) which stays finite for large |x|.
double bessel_i0(double x);
double bessel_i0_scaled(double x);

// First-order Marcum Q function Q1(a, b) = int_b^inf t exp(-(t^2+a^2)/2) I0(a t) dt.
double marcum_q1(double a, double b);

struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;   // ascending
    std::vector<double> weights; // strictly positive
};

// Gauss-Hermite rule for weight exp(-t^2), 1 <= order <= 64.
QuadratureRule gauss_hermite(int order);

// Gauss-Legendre rule on [lo, hi], order >= 1.
QuadratureRule gauss_legendre(int order, double lo = -1.0, double hi = 1.0);

} // namespace fas::special
