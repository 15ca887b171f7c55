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

#include <string>
#include <string_view>

namespace fas::kernels {

// Spatial correlation between two points delta wavelengths apart.
//   jakes:    J0(2 pi |delta|)      (isotropic scattering)
//   gaussian: exp(-pi^2 delta^2)    (matches jakes to second order at 0)
enum class CorrelationModel { jakes, gaussian };

std::string_view to_string(CorrelationModel model);
CorrelationModel parse_model(std::string_view name); // "jakes" | "gauss" | "gaussian"

// Local structure of the correlation at the origin, rho(d) = 1 - c |d|^alpha + ...
struct ContinuumParams {
    double lambda2 = 0.0;              // -rho''(0)
    double local_coeff_c = 0.0;
    double local_exponent_alpha = 0.0; // in (0, 2]
    double pickands_h = 0.0;
};

double correlation(CorrelationModel model, double delta);

struct ApproxError {
    double actual = 0.0; // |rho_J - rho_G|
    double bound = 0.0;  // pi^4 delta^4 / 4, meaningful on [0, 0.30]
};

ApproxError approx_error(double delta);

// Power spectral density, normalized so that it integrates to rho(0) = 1.
// The Gaussian PSD is exp(-f^2)/sqrt(pi). The Jakes PSD is 1/(pi sqrt(1-f^2))
// on |f| < 1, zero outside, and throws DomainError at |f| == 1.
double psd(CorrelationModel model, double f);

// Integral of the PSD over [lo, hi] by composite Gauss-Legendre quadrature.
// The Jakes density is integrated in theta with f = sin(theta), which removes
// the endpoint singularities.
double psd_mass(CorrelationModel model, double lo, double hi);

// Fraction of Gaussian spectral mass at |f| > 1, i.e. 1 - erf(1).
double spectral_leakage();

// Same quantity from numerical integration of the PSD over [-1, 1].
double spectral_leakage_numeric();

// lambda2 = -rho''(0) = 2 pi^2 for both supported models.
double second_spectral_moment(CorrelationModel model);

// -(rho(h) - 2 rho(0) + rho(-h)) / h^2
double second_spectral_moment_fd(CorrelationModel model, double h = 1e-4);

// int (2 pi f)^2 S(f) df
double second_spectral_moment_spectral(CorrelationModel model);

ContinuumParams continuum_params(CorrelationModel model);

} // namespace fas::kernels
