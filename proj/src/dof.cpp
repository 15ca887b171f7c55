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

#include "fas/dof.hpp"
#include "fas/error.hpp"
#include "fas/specialfn.hpp"

#include <cmath>
#include <numbers>

namespace fas::dof {

double participation_ratio(const field::CorrMatrix &R)
{
    const std::size_t n = R.dim();
    double tr = 0.0;
    for (double v : R.entries().data())
        tr += v * v;
    return double(n) * double(n) / tr;
}

double keff_asymptotic(field::CorrelationModel model, double W, bool use_ceil)
{
    detail::require_finite(W, "keff_asymptotic");
    if (!(W > 0.0))
        throw DomainError("keff_asymptotic: W must be positive");
    if (model == field::CorrelationModel::gaussian)
        return special::pi * std::numbers::sqrt2 * W;
    return 2.0 * (use_ceil ? std::ceil(W) : W) + 1.0;
}

double participation_ratio_limit(field::CorrelationModel model, double W)
{
    detail::require_finite(W, "participation_ratio_limit");
    if (!(W > 0.0))
        throw DomainError("participation_ratio_limit: W must be positive");
    // Riemann limit of tr(R^2)/N^2 = (1/W^2) int_0^W int_0^W rho(s-t)^2.
    const int panels = std::max(8, int(std::ceil(8.0 * W)));
    const double h = W / panels;
    const auto gl = special::gauss_legendre(20);
    double integral = 0.0;
    for (int p = 0; p < panels; ++p)
        for (int i = 0; i < gl.order; ++i)
        {
            const double d = (p + 0.5) * h + 0.5 * h * gl.nodes[std::size_t(i)];
            const double r = kernels::correlation(model, d);
            integral += 0.5 * h * gl.weights[std::size_t(i)] * 2.0 * (W - d) * r * r;
        }
    return W * W / integral;
}

int energy_threshold_k(const field::EigenSpectrum &spec, double epsilon0)
{
    detail::require_finite(epsilon0, "energy_threshold_k");
    if (!(epsilon0 > 0.0 && epsilon0 < 1.0))
        throw DomainError("energy_threshold_k: epsilon0 must lie in (0, 1)");
    const int n = int(spec.dim());
    if (n == 0)
        throw ConfigError("energy_threshold_k: empty spectrum");
    const double target = (1.0 - epsilon0) * n;
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
    {
        acc += spec.eigenvalues[std::size_t(k)];
        if (acc >= target)
            return k + 1;
    }
    return n;
}

DofReport dof_report(const field::ApertureConfig &config, double epsilon0)
{
    const auto R = field::correlation_matrix(config);
    DofReport r;
    r.participation_ratio = participation_ratio(R);
    r.asymptotic_keff = keff_asymptotic(config.model, config.W);
    r.energy_threshold_k = energy_threshold_k(field::eigendecompose(R), epsilon0);
    r.epsilon0 = epsilon0;
    return r;
}

} // namespace fas::dof
