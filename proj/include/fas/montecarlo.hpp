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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace fas::mc {

// Results are reproducible bit for bit for a fixed (seed, workers, trials).
struct McConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 42;
    int workers = 1;

    void validate() const;
};

// One splitmix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t &state);

// Independent stream for worker `worker`: mt19937_64 seeded through
// splitmix64 from (seed, worker). Normals come from the Marsaglia polar
// method so the sequence does not depend on the standard library.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t worker);

    double uniform(); // [0, 1), 53 random bits
    double normal();  // N(0, 1)
    // Standard complex normal: real and imaginary parts N(0, 1/2).
    void complex_normal(double &re, double &im);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// g = A z with A real (N x r) and z a vector of r i.i.d. standard complex
// normals, so E[g g^H] = A A^T.
class GainSampler {
public:
    explicit GainSampler(Matrix factor);

    static GainSampler from_cholesky(const field::CholeskyFactor &chol);
    // Columns sqrt(lambda_k) u_k of the truncated expansion.
    static GainSampler from_kl(const field::KlSpec &kl);
    // Cholesky, falling back to the pivoted low-rank factor when the
    // matrix is too close to singular for the jitter ladder.
    static GainSampler for_matrix(const field::CorrMatrix &R);

    std::size_t ports() const { return a_.rows(); }
    std::size_t rank() const { return a_.cols(); }
    const Matrix &factor() const { return a_; }

    // Writes |g_n|^2 for one draw. `z` is scratch of size 2 * rank().
    void draw_power(Stream &s, std::span<double> z, std::span<double> power) const;
    void draw(Stream &s, std::span<double> z, std::span<double> re, std::span<double> im) const;

private:
    Matrix a_;
};

// Outage P(max_n |g_n|^2 < x).
OutageEstimate simulate_outage(const field::CorrMatrix &R, double x, const McConfig &cfg);
// Several thresholds evaluated on the same draws.
std::vector<OutageEstimate> simulate_outage(const GainSampler &sampler, std::span<const double> xs,
                                            const McConfig &cfg);
OutageEstimate simulate_outage(const GainSampler &sampler, double x, const McConfig &cfg);

// Truncated expansion g_n = sum_k sqrt(lambda_k) u_{n,k} z_k.
OutageEstimate simulate_outage_truncated(const field::KlSpec &kl, double x, const McConfig &cfg);

struct MeanEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
};

// E[log2(1 + avg_snr max_n |g_n|^2)], avg_snr linear.
MeanEstimate simulate_ergodic_rate(const field::CorrMatrix &R, double avg_snr, const McConfig &cfg);
MeanEstimate simulate_ergodic_rate(const GainSampler &sampler, double avg_snr, const McConfig &cfg);

// Upcrossings of level u by chi_n = |g(tau_n)|^2 along the port grid:
// indices with chi_n < u <= chi_{n+1}. The field is drawn through the
// pivoted low-rank factor, so dense grids are affordable.
MeanEstimate count_upcrossings(const field::ApertureConfig &config, double u, const McConfig &cfg);

// P(max_n chi_n >= u) on the grid, through the low-rank factor.
OutageEstimate simulate_exceedance(const field::ApertureConfig &config, double u, const McConfig &cfg);

} // namespace fas::mc
