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

#include <cstddef>
#include <vector>

namespace fas::bounds {

// Closed-form series for the max of N equi-correlated unit exponentials,
//   sum_k C(N,k) (-1)^k exp(-k x / (1 + (k-1) rho)) / (1 + (k-1) rho).
// For rho > 0 its x -> infinity limit is 1 / (1 - rho), so it is not a CDF;
// `valid` is false whenever the value leaves [0, 1] or the limit is not 1.
struct SeriesValue {
    double value = 0.0;
    bool valid = true;
};

SeriesValue equicorr_cdf_series(double x, double rho, int N);

// Exact CDF of max_n |h_n|^2 for h_n = sqrt(rho) a + sqrt(1 - rho) w_n:
//   E_{t ~ Exp(1)} [1 - Q1(sqrt(2 rho t / (1 - rho)), sqrt(2 x / (1 - rho)))]^N.
// The integrand is a smoothed step in t centred near x / rho; the t axis is
// cut into Gauss-Legendre panels of order quad_points aligned to that step.
double equicorr_cdf_exact(double x, double rho, int N, int quad_points = 20);

// Extremes and mean of |R_mn| over m != n.
struct CorrelationExtremes {
    double rho_min = 0.0;
    double rho_max = 0.0;
    double rho_avg = 0.0;
};

CorrelationExtremes rho_extremes(const field::CorrMatrix &R);

// Equi-correlated comparison bounds. Raising every pairwise correlation
// raises the max-gain CDF, so the outage sits between the CDFs at the two
// extremes:
//   lower = F_eq(x; rho_min, N) <= P_out(x) <= F_eq(x; rho_max, N) = upper.
// The opposite assignment (rho_max on the lower side) contradicts the
// monotonicity of F_eq in rho and is not used.
struct Sandwich {
    OutageEstimate lower;
    OutageEstimate upper;
    CorrelationExtremes extremes;
};

Sandwich slepian_sandwich(const field::CorrMatrix &R, double x);

// Contiguous blocks [begin, end), sizes differing by at most one with the
// remainder on the leading blocks.
struct BlockPartition {
    int B = 0;
    std::vector<std::pair<std::size_t, std::size_t>> boundaries;
    std::vector<double> rho_b_min;  // 0 for singleton blocks
    double rho_cross_max = 0.0;     // over pairs in different blocks
    bool valid = false;             // rho_cross_max <= rho_b_min for every non-singleton block
};

BlockPartition make_partition(const field::CorrMatrix &R, int B);

// prod_b F_eq(x; rho_b_min, N_b). Returned regardless of partition.valid;
// when the condition fails the value is advisory.
struct BlockBound {
    OutageEstimate bound;
    BlockPartition partition;
};

BlockBound block_refined_bound(const field::CorrMatrix &R, double x, int B);

} // namespace fas::bounds
