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

#include "fas/fieldmodel.hpp"

namespace fas::dof {

struct DofReport {
    double participation_ratio = 0.0;
    double asymptotic_keff = 0.0;
    int energy_threshold_k = 0;
    double epsilon0 = 0.0;
};

// N^2 / sum_{m,n} R_mn^2, the participation ratio of the eigenvalue spectrum.
double participation_ratio(const field::CorrMatrix &R);

// Large-N asymptotics of the participation ratio.
//   gaussian: pi sqrt(2) W
//   jakes:    2W + 1, or 2 ceil(W) + 1 with use_ceil
double keff_asymptotic(field::CorrelationModel model, double W, bool use_ceil = false);

// W^2 / int_{-W}^{W} (W - |d|) rho(d)^2 dd: the exact N -> infinity limit of
// the participation ratio at fixed W.
double participation_ratio_limit(field::CorrelationModel model, double W);

// min{K : lambda_1 + ... + lambda_K >= (1 - epsilon0) N}
int energy_threshold_k(const field::EigenSpectrum &spec, double epsilon0);

DofReport dof_report(const field::ApertureConfig &config, double epsilon0);

} // namespace fas::dof
