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

#include "fas/error.hpp"
#include "fas/specialfn.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace fas;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Bessel J0 and J1 against the standard library", "[specialfn]")
{
    double worst = 0.0;
    for (double x = 0.0; x <= 80.0; x += 0.0137)
    {
        worst = std::max(worst, std::abs(special::bessel_j0(x) - std::cyl_bessel_j(0.0, x)));
        worst = std::max(worst, std::abs(special::bessel_j1(x) - std::cyl_bessel_j(1.0, x)));
    }
    CHECK(worst < 1e-11);
    // Both sides of the series / asymptotic switch.
    for (double x : {11.999, 12.0, 12.001})
        CHECK_THAT(special::bessel_j0(x), WithinAbs(std::cyl_bessel_j(0.0, x), 1e-12));
}

TEST_CASE("Bessel parity and first zero", "[specialfn]")
{
    CHECK(special::bessel_j0(-3.7) == special::bessel_j0(3.7));
    CHECK(special::bessel_j1(-3.7) == -special::bessel_j1(3.7));
    CHECK(special::bessel_j0(0.0) == 1.0);
    CHECK(special::bessel_j1(0.0) == 0.0);
    CHECK_THAT(special::bessel_j0(2.404825557695773), WithinAbs(0.0, 1e-14));
}

TEST_CASE("erf reference values", "[specialfn]")
{
    CHECK_THAT(special::erf(1.0), WithinAbs(0.8427007929497149, 1e-15));
    CHECK(special::erf(0.0) == 0.0);
    CHECK(special::erf(-2.0) == -special::erf(2.0));
}

TEST_CASE("E1 against the exponential integral Ei", "[specialfn]")
{
    for (double x = 1e-3; x < 60.0; x *= 1.07)
        CHECK_THAT(special::exp_integral_e1(x), WithinRel(-std::expint(-x), 1e-13));
    CHECK_THAT(special::exp_integral_e1(1.0), WithinRel(0.21938393439552027, 1e-14));
}

TEST_CASE("scaled E1 stays finite where E1 underflows", "[specialfn]")
{
    // e^x E1(x) ~ (1/x)(1 - 1/x + 2/x^2 - 6/x^3 + 24/x^4)
    const double x = 900.0;
    const double series = (1.0 - 1.0 / x + 2.0 / (x * x) - 6.0 / (x * x * x) + 24.0 / (x * x * x * x)) / x;
    CHECK_THAT(special::exp_integral_e1_scaled(x), WithinRel(series, 1e-12));
    CHECK(special::exp_integral_e1(900.0) >= 0.0);
    CHECK_THROWS_AS(special::exp_integral_e1(0.0), DomainError);
    CHECK_THROWS_AS(special::exp_integral_e1(-1.0), DomainError);
}

TEST_CASE("I0 against the standard library", "[specialfn]")
{
    for (double x = 0.0; x < 80.0; x += 0.31)
    {
        CHECK_THAT(special::bessel_i0(x), WithinRel(std::cyl_bessel_i(0.0, x), 1e-13));
        CHECK_THAT(special::bessel_i0_scaled(x), WithinRel(std::exp(-x) * std::cyl_bessel_i(0.0, x), 1e-13));
    }
    CHECK(special::bessel_i0(-2.5) == special::bessel_i0(2.5));
}

TEST_CASE("Marcum Q1 against the Poisson-mixture oracle", "[specialfn]")
{
    double worst = 0.0;
    for (double a : {0.01, 0.3, 1.0, 2.5, 5.0, 9.0, 15.0, 25.0})
        for (double b : {0.01, 0.4, 1.0, 2.0, 4.0, 7.0, 12.0, 20.0, 30.0})
        {
            const double ref = oracle::marcum_q1_poisson(a, b);
            const double got = special::marcum_q1(a, b);
            worst = std::max(worst, std::abs(got - ref));
            if (ref > 1e-250)
                CHECK_THAT(got, WithinRel(ref, 1e-9) || WithinAbs(ref, 1e-15));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("Marcum Q1 reference values and edges", "[specialfn]")
{
    // Noncentral chi-square survival values sf(b^2; 2, a^2).
    CHECK_THAT(special::marcum_q1(1.0, 1.0), WithinRel(0.7328798037968203, 1e-12));
    CHECK_THAT(special::marcum_q1(3.0, 2.0), WithinRel(0.8867207544023924, 1e-12));
    CHECK_THAT(special::marcum_q1(10.0, 12.0), WithinRel(0.025329474297941492, 1e-10));
    CHECK_THAT(special::marcum_q1(0.5, 5.0), WithinRel(1.1690765011687958e-05, 1e-10));
    CHECK(special::marcum_q1(2.0, 0.0) == 1.0);
    CHECK_THAT(special::marcum_q1(0.0, 1.7), WithinRel(std::exp(-0.5 * 1.7 * 1.7), 1e-15));
    CHECK_THROWS_AS(special::marcum_q1(-1.0, 1.0), DomainError);
}

TEST_CASE("Marcum Q1 matches its defining integral", "[specialfn]")
{
    for (auto [a, b] : {std::pair{0.7, 1.3}, std::pair{4.0, 3.0}, std::pair{2.0, 6.0}})
    {
        auto f = [a = a](double t) { return t * std::exp(-0.5 * (t - a) * (t - a)) * std::exp(-a * t) *
                                            std::cyl_bessel_i(0.0, a * t); };
        const double ref = oracle::simpson(f, b, b + 40.0, 1e-14);
        CHECK_THAT(special::marcum_q1(a, b), WithinAbs(ref, 1e-11));
    }
}

TEST_CASE("Gauss-Hermite integrates even moments exactly", "[specialfn]")
{
    for (int n : {1, 2, 5, 16, 24, 32, 64})
    {
        const auto r = special::gauss_hermite(n);
        REQUIRE(r.nodes.size() == std::size_t(n));
        for (int i = 0; i + 1 < n; ++i)
            CHECK(r.nodes[std::size_t(i)] < r.nodes[std::size_t(i + 1)]);
        for (int i = 0; i < n; ++i)
        {
            CHECK(r.nodes[std::size_t(i)] == -r.nodes[std::size_t(n - 1 - i)]);
            CHECK(r.weights[std::size_t(i)] > 0.0);
        }
        for (int k = 0; 2 * k <= std::min(2 * n - 1, 24); ++k)
        {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += r.weights[std::size_t(i)] * std::pow(r.nodes[std::size_t(i)], 2 * k);
            CHECK_THAT(s, WithinRel(std::tgamma(k + 0.5), 1e-12));
        }
    }
    CHECK_THROWS_AS(special::gauss_hermite(0), ConfigError);
    CHECK_THROWS_AS(special::gauss_hermite(65), ConfigError);
}

TEST_CASE("Gauss-Legendre on a mapped interval", "[specialfn]")
{
    const auto r = special::gauss_legendre(12, 1.0, 3.0);
    double s = 0.0, e = 0.0;
    for (int i = 0; i < 12; ++i)
    {
        s += r.weights[std::size_t(i)] * std::pow(r.nodes[std::size_t(i)], 23);
        e += r.weights[std::size_t(i)] * std::exp(r.nodes[std::size_t(i)]);
    }
    CHECK_THAT(s, WithinRel((std::pow(3.0, 24) - 1.0) / 24.0, 1e-13));
    CHECK_THAT(e, WithinRel(std::exp(3.0) - std::exp(1.0), 1e-14));
}
