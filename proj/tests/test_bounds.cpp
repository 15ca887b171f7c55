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

#include "fas/bounds.hpp"
#include "fas/error.hpp"
#include "fas/montecarlo.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace fas;
using field::CorrelationModel;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Direct simulation of h_n = sqrt(rho) a + sqrt(1 - rho) w_n with its own
// generator, independent of the library sampler.
std::pair<double, double> equicorr_mc(double x, double rho, int N, int trials)
{
    std::mt19937_64 gen(20240611);
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    const double a_scale = std::sqrt(rho), w_scale = std::sqrt(1.0 - rho);
    int hits = 0;
    for (int t = 0; t < trials; ++t)
    {
        const double ar = g(gen), ai = g(gen);
        double peak = 0.0;
        for (int n = 0; n < N; ++n)
        {
            const double re = a_scale * ar + w_scale * g(gen);
            const double im = a_scale * ai + w_scale * g(gen);
            peak = std::max(peak, re * re + im * im);
        }
        hits += peak < x;
    }
    const double p = double(hits) / trials;
    return {p, std::sqrt(p * (1.0 - p) / trials)};
}

} // namespace

TEST_CASE("printed series at independence", "[bounds]")
{
    for (int N : {1, 2, 5, 12})
        for (double x : {0.3, 1.0, 4.0})
        {
            const auto s = bounds::equicorr_cdf_series(x, 0.0, N);
            CHECK(s.valid);
            CHECK_THAT(s.value, WithinAbs(std::pow(1.0 - std::exp(-x), N), 1e-10));
        }
    CHECK_THAT(bounds::equicorr_cdf_series(1.0, 0.0, 2).value, WithinAbs(0.39958, 5e-6));
    CHECK_THAT(bounds::equicorr_cdf_series(1.7, 0.0, 1).value, WithinAbs(1.0 - std::exp(-1.7), 1e-15));
}

TEST_CASE("printed series keeps its k = 0 term", "[bounds]")
{
    // The k = 0 term is 1 / (1 - rho), so even a single port is off by
    // rho / (1 - rho) once rho > 0.
    const auto one = bounds::equicorr_cdf_series(1.7, 0.6, 1);
    CHECK_THAT(one.value, WithinAbs(1.0 / 0.4 - std::exp(-1.7), 1e-14));
    CHECK_FALSE(one.valid);
}

TEST_CASE("printed series fails normalization under correlation", "[bounds]")
{
    const auto s = bounds::equicorr_cdf_series(1.0, 0.5, 2);
    const double terms = 2.0 - 2.0 * std::exp(-1.0) + std::exp(-4.0 / 3.0) / 1.5;
    CHECK_THAT(s.value, WithinAbs(terms, 1e-12));
    CHECK_THAT(s.value, WithinAbs(1.4400, 5e-5));
    CHECK_FALSE(s.valid);
    // Its large-x limit is 1 / (1 - rho), not 1.
    CHECK_THAT(bounds::equicorr_cdf_series(200.0, 0.5, 2).value, WithinRel(2.0, 1e-12));
    CHECK_THROWS_AS(bounds::equicorr_cdf_series(1.0, 1.0, 2), DomainError);
    CHECK_THROWS_AS(bounds::equicorr_cdf_series(1.0, 0.2, 0), ConfigError);
}

TEST_CASE("exact equi-correlated CDF closed-form cases", "[bounds]")
{
    for (double x : {0.1, 1.0, 3.0, 8.0})
    {
        CHECK_THAT(bounds::equicorr_cdf_exact(x, 0.0, 6), WithinAbs(std::pow(1.0 - std::exp(-x), 6), 1e-8));
        for (double rho : {0.2, 0.7, 0.99})
            CHECK_THAT(bounds::equicorr_cdf_exact(x, rho, 1), WithinAbs(1.0 - std::exp(-x), 1e-8));
    }
    CHECK(bounds::equicorr_cdf_exact(0.0, 0.5, 4) == 0.0);
    CHECK_THROWS_AS(bounds::equicorr_cdf_exact(1.0, 1.0, 4), DomainError);
    CHECK_THROWS_AS(bounds::equicorr_cdf_exact(-1.0, 0.5, 4), DomainError);
}

TEST_CASE("exact equi-correlated CDF is a CDF", "[bounds]")
{
    for (double rho : {0.1, 0.5, 0.9, 0.999})
        for (int N : {2, 10, 50})
        {
            double prev = 0.0;
            for (double x = 0.05; x < 12.0; x *= 1.3)
            {
                const double f = bounds::equicorr_cdf_exact(x, rho, N);
                CHECK(f >= prev - 1e-14);
                CHECK(f <= 1.0);
                prev = f;
            }
            CHECK_THAT(bounds::equicorr_cdf_exact(50.0, rho, N), WithinAbs(1.0, 1e-6));
        }
    // Stronger correlation raises the CDF.
    for (double x : {0.5, 1.0, 3.0})
    {
        double prev = 0.0;
        for (double rho : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95})
        {
            const double f = bounds::equicorr_cdf_exact(x, rho, 10);
            CHECK(f >= prev);
            prev = f;
        }
    }
}

TEST_CASE("exact equi-correlated CDF against direct simulation", "[bounds][mc]")
{
    const auto [p, se] = equicorr_mc(1.0, 0.5, 4, 1'000'000);
    CHECK(std::abs(bounds::equicorr_cdf_exact(1.0, 0.5, 4) - p) <= 3.0 * se);
}

TEST_CASE("correlation extremes", "[bounds]")
{
    const auto two = bounds::rho_extremes(field::correlation_matrix({1.0, 2, CorrelationModel::gaussian}));
    const double e = std::exp(-M_PI * M_PI);
    CHECK_THAT(two.rho_min, WithinRel(e, 1e-14));
    CHECK_THAT(two.rho_max, WithinRel(e, 1e-14));

    const auto eleven = bounds::rho_extremes(field::correlation_matrix({1.0, 11, CorrelationModel::gaussian}));
    CHECK_THAT(eleven.rho_max, WithinAbs(std::exp(-M_PI * M_PI / 100.0), 1e-15));
    CHECK_THAT(eleven.rho_max, WithinAbs(0.9061, 1e-4));
    CHECK_THAT(eleven.rho_min, WithinRel(e, 1e-14));

    const auto id = bounds::rho_extremes(field::CorrMatrix::from_entries(Matrix::identity(5)));
    CHECK(id.rho_min == 0.0);
    CHECK(id.rho_max == 0.0);
    CHECK(id.rho_avg == 0.0);
    CHECK_THROWS_AS(bounds::rho_extremes(field::CorrMatrix::from_entries(Matrix::identity(1))), ConfigError);
}

TEST_CASE("sandwich bounds", "[bounds]")
{
    const auto id = bounds::slepian_sandwich(field::CorrMatrix::from_entries(Matrix::identity(6)), 1.0);
    const double indep = std::pow(1.0 - std::exp(-1.0), 6);
    CHECK_THAT(id.lower.p, WithinAbs(indep, 1e-8));
    CHECK_THAT(id.upper.p, WithinAbs(indep, 1e-8));

    const auto R = field::correlation_matrix({1.0, 20, CorrelationModel::gaussian});
    const auto s = bounds::slepian_sandwich(R, 1.0);
    CHECK(s.lower.method == OutageEstimate::Method::sandwich_lo);
    CHECK(s.upper.method == OutageEstimate::Method::sandwich_hi);
    CHECK(s.lower.p <= s.upper.p);
    CHECK_THAT(s.lower.p, WithinAbs(bounds::equicorr_cdf_exact(1.0, s.extremes.rho_min, 20), 1e-15));
    CHECK_THROWS_AS(bounds::slepian_sandwich(R, 0.0), DomainError);
}

TEST_CASE("sandwich contains the simulated outage", "[bounds][mc]")
{
    mc::McConfig cfg;
    cfg.trials = 1'000'000;
    for (auto m : {CorrelationModel::gaussian, CorrelationModel::jakes})
    {
        const auto R = field::correlation_matrix({1.0, 20, m});
        const auto s = bounds::slepian_sandwich(R, 1.0);
        const auto sim = mc::simulate_outage(R, 1.0, cfg);
        CHECK(sim.p >= s.lower.p - 3.0 * *sim.std_err);
        CHECK(sim.p <= s.upper.p + 3.0 * *sim.std_err);
    }
}

TEST_CASE("block partition layout", "[bounds]")
{
    const auto R = field::correlation_matrix({1.0, 10, CorrelationModel::gaussian});
    const auto p = bounds::make_partition(R, 3);
    REQUIRE(p.boundaries.size() == 3);
    CHECK(p.boundaries[0] == std::pair<std::size_t, std::size_t>{0, 4});
    CHECK(p.boundaries[1] == std::pair<std::size_t, std::size_t>{4, 7});
    CHECK(p.boundaries[2] == std::pair<std::size_t, std::size_t>{7, 10});
    // Gaussian decay: block minimum is the end-to-end entry of each block.
    CHECK_THAT(p.rho_b_min[0], WithinRel(R(0, 3), 1e-15));
    CHECK_THAT(p.rho_cross_max, WithinRel(R(0, 1), 1e-15));
    CHECK_FALSE(p.valid);

    const auto singles = bounds::make_partition(R, 10);
    CHECK(singles.valid);
    for (double r : singles.rho_b_min)
        CHECK(r == 0.0);

    CHECK_THROWS_AS(bounds::make_partition(R, 0), ConfigError);
    CHECK_THROWS_AS(bounds::make_partition(R, 11), ConfigError);
}

TEST_CASE("block bound limiting cases", "[bounds]")
{
    const auto R = field::correlation_matrix({1.0, 20, CorrelationModel::gaussian});
    const double x = 1.0;
    const auto one = bounds::block_refined_bound(R, x, 1);
    CHECK(one.bound.method == OutageEstimate::Method::block);
    CHECK(one.bound.p == bounds::slepian_sandwich(R, x).lower.p);
    const auto all = bounds::block_refined_bound(R, x, 20);
    CHECK_THAT(all.bound.p, WithinRel(std::pow(1.0 - std::exp(-x), 20), 1e-8));
    CHECK(all.bound.valid);
    CHECK_THROWS_AS(bounds::block_refined_bound(R, 0.0, 2), DomainError);
}
