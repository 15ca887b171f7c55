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
#include "fas/outage_estimate.hpp"

namespace fas::kl {

// Normalized SNR threshold x = gamma_th / avg_gamma.
struct ThresholdSpec {
    double avg_snr_db = 0.0;
    double threshold_db = 0.0;
    double x = 1.0;

    static ThresholdSpec from_db(double avg_snr_db, double threshold_db);
};

// x = 10^((threshold_db - avg_snr_db) / 10)
double normalized_threshold(double avg_snr_db, double threshold_db);

struct Rank1Params {
    double lambda1 = 0.0;
    double c1 = 0.0; // max_n |u_{n,1}|^2
};

Rank1Params rank1_params(const field::EigenSpectrum &spec);

// 1 - exp(-x / (lambda1 c1))
OutageEstimate outage_rank1(const field::EigenSpectrum &spec, double x);

// Rank-2 model g_n = sqrt(l1) u_n1 z1 + sqrt(l2) u_n2 z2. Given z1 each port
// confines z2 to a disk whose centre lies on the line through the origin
// along z1. By rotation invariance the conditional probability depends on
// |z1|^2 ~ Exp(1) only, so the outer average is a 1-D Gauss-Legendre rule of
// order quad_order over the support of that probability. The inner
// probability is swept row by row (inner_grid rows across the smallest
// disk) with each row integrated exactly through erf. Ports with
// |u_n2| < 1e-12 impose a z2-free condition on |z1|.
OutageEstimate outage_rank2(const field::EigenSpectrum &spec, double x, int quad_order = 24,
                            int inner_grid = 200);

// Largest rank accepted by outage_rankK; beyond it use Monte Carlo.
inline constexpr int max_quadrature_rank = 4;

// Rank-K model evaluated with a tensor Gauss-Hermite rule, prefactor 1/pi
// per complex axis. The common phase of the K coefficients leaves every port
// gain unchanged, so z_1 is rotated onto the nonnegative real axis; its
// modulus is then integrated exactly (each port confines it to an interval,
// and |z_1|^2 ~ Exp(1)) while z_2..z_K use the tensor rule over 2(K-1) real
// axes. K = 1 is therefore exact. Subtrees whose weight product drops below
// 1e-15 are skipped; their total mass is reported in `detail`. Outer-axis
// slices may be spread across `workers` threads; partial sums are reduced in
// slice order, so the result does not depend on the worker count.
OutageEstimate outage_rankK(const field::EigenSpectrum &spec, int K, double x, int quad_order = 24,
                            int workers = 1);

// e^b E1(b) / ln 2 with b = 1 / (avg_snr lambda1 c1); avg_snr is linear.
double ergodic_rate_rank1(const field::EigenSpectrum &spec, double avg_snr);

} // namespace fas::kl
