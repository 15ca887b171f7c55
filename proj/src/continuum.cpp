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

#include "fas/continuum.hpp"
#include "fas/error.hpp"
#include "fas/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fas::continuum {

using special::pi;

namespace {

constexpr double deep_level = 6.0;

void require_positive(double v, const char *what, const char *name)
{
    detail::require_finite(v, what);
    if (!(v > 0.0))
        throw DomainError(std::string(what) + ": " + name + " must be positive");
}

void require_nonnegative(double v, const char *what, const char *name)
{
    detail::require_finite(v, what);
    if (v < 0.0)
        throw DomainError(std::string(what) + ": " + name + " must be nonnegative");
}

ContinuumResult clip(double raw, double level)
{
    ContinuumResult r;
    r.raw = raw;
    r.value = std::clamp(raw, 0.0, 1.0);
    r.clamped = r.value != raw;
    r.regime = regime_hint(level);
    return r;
}

} // namespace

std::string_view to_string(Regime regime)
{
    return regime == Regime::deep ? "deep" : "moderate";
}

Regime regime_hint(double x)
{
    return x >= deep_level ? Regime::deep : Regime::moderate;
}

ContinuumResult exceedance_adler_taylor(double u, double W, double lambda2)
{
    require_positive(u, "exceedance_adler_taylor", "u");
    require_nonnegative(W, "exceedance_adler_taylor", "W");
    require_positive(lambda2, "exceedance_adler_taylor", "lambda2");
    return clip(std::exp(-u) * (1.0 + W * std::sqrt(lambda2) * u), u);
}

ContinuumResult outage_continuous(double x, double W)
{
    const auto ex = exceedance_adler_taylor(x, W, 2.0 * pi * pi);
    ContinuumResult r;
    r.raw = 1.0 - ex.raw;
    r.value = 1.0 - ex.value;
    r.clamped = ex.clamped;
    r.regime = ex.regime;
    return r;
}

double rice_upcrossing_rate(double u, double lambda2)
{
    require_positive(u, "rice_upcrossing_rate", "u");
    require_positive(lambda2, "rice_upcrossing_rate", "lambda2");
    return std::sqrt(lambda2 / (2.0 * pi)) * u * std::exp(-u);
}

double expected_upcrossings(double u, double W, double lambda2)
{
    require_nonnegative(W, "expected_upcrossings", "W");
    return W * rice_upcrossing_rate(u, lambda2);
}

double pickands_constant(double alpha)
{
    if (alpha != 2.0)
        throw DomainError("pickands_constant: closed form known only for alpha = 2");
    return 1.0 / special::sqrt_pi;
}

ContinuumResult exceedance_piterbarg(double u, double W, const kernels::ContinuumParams &params)
{
    require_positive(u, "exceedance_piterbarg", "u");
    require_positive(W, "exceedance_piterbarg", "W");
    const double alpha = params.local_exponent_alpha;
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw DomainError("exceedance_piterbarg: alpha must lie in (0, 2]");
    require_positive(params.local_coeff_c, "exceedance_piterbarg", "c");
    require_positive(params.pickands_h, "exceedance_piterbarg", "H_alpha");
    const double raw = params.pickands_h * std::pow(params.local_coeff_c, 1.0 / alpha) * W *
                       std::pow(u, 1.0 / alpha) * std::exp(-u);
    return clip(raw, u);
}

ContinuumResult exceedance_euler_heuristic(double u, double W, double lambda2)
{
    require_positive(u, "exceedance_euler_heuristic", "u");
    return clip(std::exp(-u) + expected_upcrossings(u, W, lambda2), u);
}

double n_eff(double x, double W)
{
    require_positive(x, "n_eff", "x");
    require_nonnegative(W, "n_eff", "W");
    return 1.0 + pi * std::numbers::sqrt2 * W * x;
}

} // namespace fas::continuum
