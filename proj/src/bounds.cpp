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
#include "fas/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fas::bounds {

namespace {

// exp(-t) is below 1e-19 past this point.
constexpr double t_max = 45.0;

void check_args(double x, double rho, int N, const char *what)
{
    detail::require_finite(x, what);
    detail::require_finite(rho, what);
    if (x < 0.0)
        throw DomainError(std::string(what) + ": x must be nonnegative");
    if (rho < 0.0 || rho >= 1.0)
        throw DomainError(std::string(what) + ": rho must lie in [0, 1)");
    if (N < 1)
        throw ConfigError(std::string(what) + ": N must be at least 1");
}

} // namespace

SeriesValue equicorr_cdf_series(double x, double rho, int N)
{
    check_args(x, rho, N, "equicorr_cdf_series");
    double sum = 0.0, binom = 1.0;
    for (int k = 0; k <= N; ++k)
    {
        const double d = 1.0 + (k - 1) * rho;
        const double term = binom * std::exp(-k * x / d) / d;
        sum += (k % 2 ? -term : term);
        binom = binom * (N - k) / (k + 1);
    }
    SeriesValue s;
    s.value = sum;
    // Only the k = 0 term survives as x -> infinity.
    const double limit = 1.0 / (1.0 - rho);
    s.valid = sum >= 0.0 && sum <= 1.0 && std::abs(limit - 1.0) <= 1e-12;
    return s;
}

double equicorr_cdf_exact(double x, double rho, int N, int quad_points)
{
    check_args(x, rho, N, "equicorr_cdf_exact");
    if (quad_points < 1)
        throw ConfigError("equicorr_cdf_exact: quad_points must be positive");
    if (x == 0.0)
        return 0.0;
    if (rho == 0.0 || N == 1)
        return std::pow(-std::expm1(-x), N);

    const double b = std::sqrt(2.0 * x / (1.0 - rho));
    const double scale = 2.0 * rho / (1.0 - rho);
    auto integrand = [&](double t) {
        const double q = special::marcum_q1(std::sqrt(scale * t), b);
        return std::exp(-t) * std::pow(1.0 - q, N);
    };

    // Breakpoints: fine panels of width s around the step at t0, unit
    // panels elsewhere.
    const double t0 = x / rho;
    const double s = std::sqrt(2.0 * (1.0 - rho) * x) / rho;
    std::vector<double> cuts{0.0};
    auto push = [&](double c) {
        if (c > cuts.back() && c < t_max)
            cuts.push_back(c);
    };
    const double fine_lo = t0 - 8.0 * s, fine_hi = t0 + 8.0 * s;
    for (double c = 1.0; c < std::min(fine_lo, t_max); c += 1.0)
        push(c);
    for (int k = -8; k <= 8; ++k)
        push(t0 + k * s);
    for (double c = std::max(fine_hi, cuts.back()) + 1.0; c < t_max; c += 1.0)
        push(c);
    cuts.push_back(t_max);

    const auto gl = special::gauss_legendre(quad_points);
    double sum = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p)
    {
        const double mid = 0.5 * (cuts[p] + cuts[p + 1]), half = 0.5 * (cuts[p + 1] - cuts[p]);
        for (int i = 0; i < quad_points; ++i)
            sum += half * gl.weights[std::size_t(i)] * integrand(mid + half * gl.nodes[std::size_t(i)]);
    }
    return std::clamp(sum, 0.0, 1.0);
}

CorrelationExtremes rho_extremes(const field::CorrMatrix &R)
{
    const std::size_t n = R.dim();
    if (n < 2)
        throw ConfigError("rho_extremes: needs at least two ports");
    CorrelationExtremes e;
    e.rho_min = HUGE_VAL;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const double v = std::abs(R(i, j));
            e.rho_min = std::min(e.rho_min, v);
            e.rho_max = std::max(e.rho_max, v);
            sum += v;
        }
    e.rho_min = std::min(e.rho_min, 1.0);
    e.rho_max = std::min(e.rho_max, 1.0);
    e.rho_avg = 2.0 * sum / (double(n) * double(n - 1));
    return e;
}

namespace {

// rho at 1 would make the equi-correlated model degenerate; stay just below.
double usable_rho(double rho)
{
    return std::min(rho, 1.0 - 1e-15);
}

} // namespace

Sandwich slepian_sandwich(const field::CorrMatrix &R, double x)
{
    detail::require_finite(x, "slepian_sandwich");
    if (!(x > 0.0))
        throw DomainError("slepian_sandwich: x must be positive");
    Sandwich s;
    s.extremes = rho_extremes(R);
    const int N = int(R.dim());
    s.lower.method = OutageEstimate::Method::sandwich_lo;
    s.lower.p = s.lower.raw = equicorr_cdf_exact(x, usable_rho(s.extremes.rho_min), N);
    s.lower.detail = "rho=rho_min";
    s.upper.method = OutageEstimate::Method::sandwich_hi;
    s.upper.p = s.upper.raw = equicorr_cdf_exact(x, usable_rho(s.extremes.rho_max), N);
    s.upper.detail = "rho=rho_max";
    return s;
}

BlockPartition make_partition(const field::CorrMatrix &R, int B)
{
    const std::size_t n = R.dim();
    if (B < 1 || std::size_t(B) > n)
        throw ConfigError("block partition: B must be in [1, " + std::to_string(n) + "], got " +
                          std::to_string(B));
    BlockPartition part;
    part.B = B;
    const std::size_t base = n / std::size_t(B), extra = n % std::size_t(B);
    std::size_t begin = 0;
    for (std::size_t b = 0; b < std::size_t(B); ++b)
    {
        const std::size_t size = base + (b < extra ? 1 : 0);
        part.boundaries.emplace_back(begin, begin + size);
        begin += size;
    }

    std::vector<std::size_t> owner(n);
    for (std::size_t b = 0; b < part.boundaries.size(); ++b)
        for (std::size_t i = part.boundaries[b].first; i < part.boundaries[b].second; ++i)
            owner[i] = b;

    part.rho_b_min.assign(std::size_t(B), HUGE_VAL);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const double v = std::abs(R(i, j));
            if (owner[i] == owner[j])
                part.rho_b_min[owner[i]] = std::min(part.rho_b_min[owner[i]], v);
            else
                part.rho_cross_max = std::max(part.rho_cross_max, v);
        }

    part.valid = true;
    for (std::size_t b = 0; b < part.rho_b_min.size(); ++b)
    {
        const bool singleton = part.boundaries[b].second - part.boundaries[b].first == 1;
        if (singleton)
            part.rho_b_min[b] = 0.0;
        else if (part.rho_cross_max > part.rho_b_min[b])
            part.valid = false;
    }
    return part;
}

BlockBound block_refined_bound(const field::CorrMatrix &R, double x, int B)
{
    detail::require_finite(x, "block_refined_bound");
    if (!(x > 0.0))
        throw DomainError("block_refined_bound: x must be positive");
    BlockBound out;
    out.partition = make_partition(R, B);
    double prod = 1.0;
    for (std::size_t b = 0; b < out.partition.boundaries.size(); ++b)
    {
        const auto [lo, hi] = out.partition.boundaries[b];
        prod *= equicorr_cdf_exact(x, usable_rho(std::min(out.partition.rho_b_min[b], 1.0)), int(hi - lo));
    }
    out.bound.method = OutageEstimate::Method::block;
    out.bound.p = out.bound.raw = prod;
    out.bound.valid = out.partition.valid;
    out.bound.detail = "B=" + std::to_string(B) + (out.partition.valid ? "" : " condition-violated");
    return out;
}

} // namespace fas::bounds
