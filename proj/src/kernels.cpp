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

#include "fas/kernels.hpp"
#include "fas/error.hpp"
#include "fas/specialfn.hpp"

#include <algorithm>
#include <cmath>

namespace fas::kernels {

using special::pi;
using special::sqrt_pi;

namespace {

// Gaussian PSD decays below 1e-60 beyond |f| = 12.
constexpr double gauss_support = 12.0;

template <typename F>
double composite_gl(F &&f, double lo, double hi, double max_panel = 0.5, int order = 20)
{
    if (hi <= lo)
        return 0.0;
    const int panels = std::max(1, int(std::ceil((hi - lo) / max_panel)));
    const double width = (hi - lo) / panels;
    const auto ref = special::gauss_legendre(order);
    double sum = 0.0;
    for (int p = 0; p < panels; ++p)
    {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width, half = 0.5 * width;
        for (int i = 0; i < order; ++i)
            sum += half * ref.weights[std::size_t(i)] * f(mid + half * ref.nodes[std::size_t(i)]);
    }
    return sum;
}

} // namespace

std::string_view to_string(CorrelationModel model)
{
    return model == CorrelationModel::jakes ? "jakes" : "gauss";
}

CorrelationModel parse_model(std::string_view name)
{
    if (name == "jakes")
        return CorrelationModel::jakes;
    if (name == "gauss" || name == "gaussian")
        return CorrelationModel::gaussian;
    throw ConfigError("unknown correlation model '" + std::string(name) + "'");
}

double correlation(CorrelationModel model, double delta)
{
    detail::require_finite(delta, "correlation");
    if (model == CorrelationModel::jakes)
        return special::bessel_j0(2.0 * pi * std::abs(delta));
    return std::exp(-pi * pi * delta * delta);
}

ApproxError approx_error(double delta)
{
    detail::require_finite(delta, "approx_error");
    if (delta < 0.0)
        throw DomainError("approx_error: delta must be nonnegative");
    const double d2 = delta * delta;
    return {std::abs(correlation(CorrelationModel::jakes, delta) -
                     correlation(CorrelationModel::gaussian, delta)),
            pi * pi * pi * pi * d2 * d2 / 4.0};
}

double psd(CorrelationModel model, double f)
{
    detail::require_finite(f, "psd");
    if (model == CorrelationModel::gaussian)
        return std::exp(-f * f) / sqrt_pi;
    const double af = std::abs(f);
    if (af == 1.0)
        throw DomainError("psd: Jakes spectrum is singular at |f| = 1");
    if (af > 1.0)
        return 0.0;
    return 1.0 / (pi * std::sqrt(1.0 - f * f));
}

double psd_mass(CorrelationModel model, double lo, double hi)
{
    detail::require_finite(lo, "psd_mass");
    detail::require_finite(hi, "psd_mass");
    if (hi < lo)
        return -psd_mass(model, hi, lo);
    if (model == CorrelationModel::gaussian)
    {
        const double a = std::max(lo, -gauss_support), b = std::min(hi, gauss_support);
        return composite_gl([](double f) { return psd(CorrelationModel::gaussian, f); }, a, b);
    }
    // f = sin(theta): S_J(f) df = d(theta) / pi
    const double a = std::asin(std::clamp(lo, -1.0, 1.0));
    const double b = std::asin(std::clamp(hi, -1.0, 1.0));
    return composite_gl([](double) { return 1.0 / pi; }, a, b);
}

double spectral_leakage()
{
    return 1.0 - special::erf(1.0);
}

double spectral_leakage_numeric()
{
    return 1.0 - psd_mass(CorrelationModel::gaussian, -1.0, 1.0);
}

double second_spectral_moment(CorrelationModel)
{
    return 2.0 * pi * pi;
}

double second_spectral_moment_fd(CorrelationModel model, double h)
{
    if (!(h > 0.0))
        throw DomainError("second_spectral_moment_fd: step must be positive");
    return -(correlation(model, h) - 2.0 * correlation(model, 0.0) + correlation(model, -h)) / (h * h);
}

double second_spectral_moment_spectral(CorrelationModel model)
{
    if (model == CorrelationModel::gaussian)
    {
        return composite_gl(
            [](double f) { return 4.0 * pi * pi * f * f * psd(CorrelationModel::gaussian, f); },
            -gauss_support, gauss_support);
    }
    return composite_gl(
        [](double theta) {
            const double s = 2.0 * pi * std::sin(theta);
            return s * s / pi;
        },
        -0.5 * pi, 0.5 * pi);
}

ContinuumParams continuum_params(CorrelationModel)
{
    // Both kernels expand as 1 - pi^2 delta^2 + O(delta^4).
    return {2.0 * pi * pi, pi * pi, 2.0, 1.0 / sqrt_pi};
}

} // namespace fas::kernels
