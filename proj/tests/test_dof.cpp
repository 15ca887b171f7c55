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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace fas;
using field::CorrelationModel;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("participation ratio of simple matrices", "[dof]")
{
    CHECK_THAT(dof::participation_ratio(field::CorrMatrix::from_entries(Matrix::identity(10))),
               WithinRel(10.0, 1e-15));
    const double rho = 0.4;
    CHECK_THAT(dof::participation_ratio(field::equicorrelated_matrix(10, rho)),
               WithinRel(10.0 / (1.0 + 9.0 * rho * rho), 1e-14));
    CHECK_THAT(dof::participation_ratio(field::equicorrelated_matrix(10, 1.0)), WithinRel(1.0, 1e-15));
}

TEST_CASE("participation ratio approaches its continuum limit", "[dof]")
{
    for (auto m : {CorrelationModel::jakes, CorrelationModel::gaussian})
        for (double W : {1.0, 2.0, 3.0, 4.0, 5.0})
        {
            const double pr = dof::participation_ratio(field::correlation_matrix({W, 200, m}));
            CHECK(pr >= 1.0);
            CHECK(pr <= 200.0);
            CHECK_THAT(pr, WithinRel(dof::participation_ratio_limit(m, W), 0.01));
        }
}

TEST_CASE("Gaussian continuum limit grows like sqrt(2 pi) W", "[dof]")
{
    // int (W - |d|) exp(-2 pi^2 d^2) dd = W / sqrt(2 pi) - 1 / (2 pi^2) + o(1).
    for (double W : {2.0, 5.0, 10.0})
    {
        const double expect = W * W / (W / std::sqrt(2.0 * std::numbers::pi) - 1.0 / (2.0 * std::numbers::pi * std::numbers::pi));
        CHECK_THAT(dof::participation_ratio_limit(CorrelationModel::gaussian, W), WithinRel(expect, 1e-9));
    }
}

TEST_CASE("participation ratio increases with W", "[dof]")
{
    for (auto m : {CorrelationModel::jakes, CorrelationModel::gaussian})
    {
        double prev = 0.0;
        for (double W = 0.5; W <= 5.0; W += 0.5)
        {
            const double pr = dof::participation_ratio(field::correlation_matrix({W, 200, m}));
            CHECK(pr > prev);
            prev = pr;
        }
    }
}

TEST_CASE("asymptotic effective DoF", "[dof]")
{
    CHECK_THAT(dof::keff_asymptotic(CorrelationModel::gaussian, 1.0), WithinAbs(4.443, 5e-4));
    CHECK_THAT(dof::keff_asymptotic(CorrelationModel::jakes, 2.0), WithinAbs(5.0, 1e-15));
    CHECK_THAT(dof::keff_asymptotic(CorrelationModel::jakes, 1.2, true), WithinAbs(5.0, 1e-15));
    CHECK_THAT(dof::keff_asymptotic(CorrelationModel::jakes, 1.2), WithinAbs(3.4, 1e-15));
    const double ratio = dof::keff_asymptotic(CorrelationModel::gaussian, 200.0) /
                         dof::keff_asymptotic(CorrelationModel::jakes, 200.0);
    CHECK_THAT(ratio, WithinAbs(2.2, 0.03));
    CHECK_THROWS_AS(dof::keff_asymptotic(CorrelationModel::jakes, 0.0), DomainError);
}

TEST_CASE("energy threshold rank", "[dof]")
{
    CHECK(dof::energy_threshold_k(field::eigendecompose(Matrix::identity(10)), 0.05) == 10);
    CHECK(dof::energy_threshold_k(field::eigendecompose(field::equicorrelated_matrix(8, 1.0)), 0.3) == 1);
    const auto s = field::eigendecompose(field::correlation_matrix({2.0, 50, CorrelationModel::gaussian}));
    const int k = dof::energy_threshold_k(s, 0.01);
    double head = 0.0;
    for (int i = 0; i < k; ++i)
        head += s.eigenvalues[std::size_t(i)];
    CHECK(head >= 0.99 * 50);
    CHECK(head - s.eigenvalues[std::size_t(k - 1)] < 0.99 * 50);
    CHECK(std::abs(k - 9) <= 2);
    CHECK_THROWS_AS(dof::energy_threshold_k(s, 0.0), DomainError);
    CHECK_THROWS_AS(dof::energy_threshold_k(s, 1.0), DomainError);
}

TEST_CASE("DoF report collects the three measures", "[dof]")
{
    const field::ApertureConfig c{2.0, 50, CorrelationModel::jakes};
    const auto r = dof::dof_report(c, 0.05);
    CHECK(r.epsilon0 == 0.05);
    CHECK(r.asymptotic_keff == 5.0);
    CHECK(r.participation_ratio == dof::participation_ratio(field::correlation_matrix(c)));
    CHECK(r.energy_threshold_k == dof::energy_threshold_k(field::eigendecompose(field::correlation_matrix(c)), 0.05));
}
