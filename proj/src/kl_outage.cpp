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

#include "fas/kl_outage.hpp"
#include "fas/error.hpp"
#include "fas/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <thread>

namespace fas::kl {

using field::EigenSpectrum;
using special::pi;
using special::sqrt_pi;

namespace {

// Second-eigenvector entries below this make the port constraint z2-free.
constexpr double degenerate_entry = 1e-12;
// Weight-product threshold below which rank-K subtrees are skipped.
constexpr double prune_weight = 1e-15;

void require_threshold(double x, const char *what)
{
    detail::require_finite(x, what);
    if (!(x > 0.0))
        throw DomainError(std::string(what) + ": threshold x must be positive");
}

std::string fmt(const char *f, double a, double b = 0.0)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

} // namespace

double normalized_threshold(double avg_snr_db, double threshold_db)
{
    detail::require_finite(avg_snr_db, "normalized_threshold");
    detail::require_finite(threshold_db, "normalized_threshold");
    return std::pow(10.0, (threshold_db - avg_snr_db) / 10.0);
}

ThresholdSpec ThresholdSpec::from_db(double avg_snr_db, double threshold_db)
{
    return {avg_snr_db, threshold_db, normalized_threshold(avg_snr_db, threshold_db)};
}

Rank1Params rank1_params(const EigenSpectrum &spec)
{
    if (spec.dim() == 0)
        throw ConfigError("rank1_params: empty spectrum");
    Rank1Params p;
    p.lambda1 = spec.eigenvalues[0];
    for (std::size_t n = 0; n < spec.dim(); ++n)
        p.c1 = std::max(p.c1, spec.eigenvectors(n, 0) * spec.eigenvectors(n, 0));
    if (!(p.lambda1 > 0.0))
        throw NumericalError("rank1_params: leading eigenvalue is not positive");
    return p;
}

OutageEstimate outage_rank1(const EigenSpectrum &spec, double x)
{
    require_threshold(x, "outage_rank1");
    const auto r1 = rank1_params(spec);
    OutageEstimate e;
    e.method = OutageEstimate::Method::rank1;
    e.p = -std::expm1(-x / (r1.lambda1 * r1.c1));
    e.raw = e.p;
    e.detail = fmt("lambda1=%.17g c1=%.17g", r1.lambda1, r1.c1);
    return e;
}

namespace {

// P(z2 in all disks) for z1 rotated onto the positive real axis, |z1| = r.
class Rank2Inner {
public:
    Rank2Inner(const EigenSpectrum &spec, double x, int rows) : x_(x), rows_(rows)
    {
        const double s1 = std::sqrt(std::max(spec.eigenvalues[0], 0.0));
        const double s2 = std::sqrt(std::max(spec.eigenvalues[1], 0.0));
        for (std::size_t n = 0; n < spec.dim(); ++n)
        {
            const double a = s1 * spec.eigenvectors(n, 0);
            const double u2 = spec.eigenvectors(n, 1);
            if (std::abs(u2) < degenerate_entry || s2 == 0.0)
            {
                free_max_ = std::max(free_max_, a * a);
                continue;
            }
            const double b = s2 * u2;
            slope_.push_back(-a / b);
            radius_.push_back(std::sqrt(x) / std::abs(b));
        }
        if (!radius_.empty())
            rmin_ = *std::min_element(radius_.begin(), radius_.end());
        // Midpoint rule in theta, y = rmin sin(theta), theta in [0, pi/2].
        for (int i = 0; i < rows_; ++i)
        {
            const double th = (i + 0.5) * (0.5 * pi / rows_);
            ys_.push_back(rmin_ * std::sin(th));
            dy_.push_back(rmin_ * std::cos(th) * (0.5 * pi / rows_));
        }
    }

    // Largest |z1| with a nonempty intersection. The disks are centred on
    // one line, so the intersection is nonempty iff their diameters along
    // that line overlap; the overlap length is concave in r.
    double support() const
    {
        double r_free = free_max_ > 0.0 ? std::sqrt(x_ / free_max_) : HUGE_VAL;
        if (radius_.empty())
            return r_free;
        auto overlap = [&](double r) {
            double lo = -HUGE_VAL, hi = HUGE_VAL;
            for (std::size_t n = 0; n < radius_.size(); ++n)
            {
                lo = std::max(lo, slope_[n] * r - radius_[n]);
                hi = std::min(hi, slope_[n] * r + radius_[n]);
            }
            return hi - lo;
        };
        double a = 0.0, b = 1.0;
        while (overlap(b) > 0.0)
        {
            a = b;
            b *= 2.0;
            if (b > 1e3)
                return std::min(r_free, b);
        }
        for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it)
        {
            const double m = 0.5 * (a + b);
            (overlap(m) > 0.0 ? a : b) = m;
        }
        return std::min(r_free, b);
    }

    double operator()(double r) const
    {
        if (free_max_ * r * r > x_)
            return 0.0;
        if (radius_.empty())
            return 1.0;
        double total = 0.0;
        for (std::size_t i = 0; i < ys_.size(); ++i)
        {
            const double y = ys_[i];
            double lo = -HUGE_VAL, hi = HUGE_VAL;
            for (std::size_t n = 0; n < radius_.size(); ++n)
            {
                const double c = slope_[n] * r;
                const double h = std::sqrt(std::max(radius_[n] * radius_[n] - y * y, 0.0));
                lo = std::max(lo, c - h);
                hi = std::min(hi, c + h);
            }
            if (hi <= lo)
                continue;
            const double row = 0.5 * (special::erf(hi) - special::erf(lo));
            total += row * std::exp(-y * y) / sqrt_pi * dy_[i];
        }
        // Symmetric in y.
        return std::clamp(2.0 * total, 0.0, 1.0);
    }

private:
    double x_;
    int rows_;
    double free_max_ = 0.0;
    double rmin_ = 0.0;
    std::vector<double> slope_, radius_, ys_, dy_;
};

} // namespace

OutageEstimate outage_rank2(const EigenSpectrum &spec, double x, int quad_order, int inner_grid)
{
    require_threshold(x, "outage_rank2");
    if (spec.dim() < 2)
        throw ConfigError("outage_rank2: needs at least two ports");
    if (inner_grid < 1)
        throw ConfigError("outage_rank2: inner_grid must be positive");
    if (quad_order < 1)
        throw ConfigError("outage_rank2: quad_order must be positive");
    const Rank2Inner inner(spec, x, inner_grid);

    // The conditional probability depends on z1 only through s = |z1|^2,
    // which is Exp(1). With s = s_max (1 - w^2) the integrand vanishes
    // smoothly at w = 0; Gauss-Legendre in w on [0, 1].
    const double r_max = inner.support();
    const double s_max = std::min(r_max * r_max, 60.0);
    const auto gl = special::gauss_legendre(quad_order, 0.0, 1.0);
    double sum = 0.0;
    for (int i = 0; i < quad_order; ++i)
    {
        const double w = gl.nodes[std::size_t(i)];
        const double s = s_max * (1.0 - w * w);
        sum += gl.weights[std::size_t(i)] * 2.0 * s_max * w * std::exp(-s) * inner(std::sqrt(s));
    }

    OutageEstimate e;
    e.method = OutageEstimate::Method::rank2;
    e.raw = sum;
    e.p = std::clamp(e.raw, 0.0, 1.0);
    e.detail = "quad_order=" + std::to_string(quad_order) + " inner_grid=" + std::to_string(inner_grid);
    return e;
}

namespace {

struct TensorRule {
    int K = 0;
    int dims = 0; // Gauss-Hermite axes, 2 (K - 1)
    std::size_t ports = 0;
    std::vector<double> nodes;
    std::vector<double> weights; // normalized to sum 1
    std::vector<double> coeff;   // coeff[k * ports + n] = sqrt(lambda_k) u_{n,k}
    double x = 0.0;
};

// The common phase of (z_1, ..., z_K) does not change any |g_n|, so z_1 is
// taken real and nonnegative with rho = |z_1|, rho^2 ~ Exp(1). Axis d carries
// Re z_{2 + d/2} (even d) or Im z_{2 + d/2} (odd d); rho is integrated
// exactly at the leaves.
class TensorWalker {
public:
    explicit TensorWalker(const TensorRule &rule)
        : r_(rule), re_(std::size_t(rule.dims + 1) * rule.ports, 0.0), im_(re_) {}

    // Whole integral when there are no Gauss-Hermite axes (K = 1).
    double leaf_only() const { return radial_mass(0); }

    // Sum over the inner axes with axis 0 fixed at node i0.
    double slice(int i0, double &pruned)
    {
        pruned_ = 0.0;
        const double w = r_.weights[std::size_t(i0)];
        double s = 0.0;
        if (w < prune_weight)
            pruned_ += w;
        else
        {
            advance(0, r_.nodes[std::size_t(i0)]);
            s = w * descend(1, w);
        }
        pruned = pruned_;
        return s;
    }

private:
    // Level d + 1 partial sums after adding t on axis d.
    void advance(int d, double t)
    {
        const std::size_t N = r_.ports;
        const double *coef = &r_.coeff[std::size_t(1 + d / 2) * N];
        const double *pre = &re_[std::size_t(d) * N];
        const double *pim = &im_[std::size_t(d) * N];
        double *re = &re_[std::size_t(d + 1) * N];
        double *im = &im_[std::size_t(d + 1) * N];
        const bool real_axis = d % 2 == 0;
        for (std::size_t n = 0; n < N; ++n)
        {
            re[n] = pre[n] + (real_axis ? coef[n] * t : 0.0);
            im[n] = pim[n] + (real_axis ? 0.0 : coef[n] * t);
        }
    }

    double descend(int d, double mass)
    {
        if (d == r_.dims)
            return radial_mass(d);
        double s = 0.0;
        for (std::size_t i = 0; i < r_.nodes.size(); ++i)
        {
            const double w = r_.weights[i];
            if (mass * w < prune_weight)
            {
                pruned_ += mass * w;
                continue;
            }
            advance(d, r_.nodes[i]);
            s += w * descend(d + 1, mass * w);
        }
        return s;
    }

    // P(rho in the set where |a_n rho + re_n + j im_n|^2 <= x for all n).
    double radial_mass(int level) const
    {
        const std::size_t N = r_.ports;
        const double *re = &re_[std::size_t(level) * N];
        const double *im = &im_[std::size_t(level) * N];
        const double *a = &r_.coeff[0];
        double lo = 0.0, hi = HUGE_VAL;
        for (std::size_t n = 0; n < N; ++n)
        {
            const double slack = r_.x - im[n] * im[n];
            if (slack < 0.0)
                return 0.0;
            const double h = std::sqrt(slack);
            if (a[n] == 0.0)
            {
                if (std::abs(re[n]) > h)
                    return 0.0;
                continue;
            }
            double l = (-h - re[n]) / a[n], u = (h - re[n]) / a[n];
            if (l > u)
                std::swap(l, u);
            lo = std::max(lo, l);
            hi = std::min(hi, u);
            if (hi <= lo)
                return 0.0;
        }
        return std::exp(-lo * lo) - std::exp(-hi * hi);
    }

    const TensorRule &r_;
    std::vector<double> re_, im_;
    double pruned_ = 0.0;
};

} // namespace

OutageEstimate outage_rankK(const EigenSpectrum &spec, int K, double x, int quad_order, int workers)
{
    require_threshold(x, "outage_rankK");
    if (K < 1 || std::size_t(K) > spec.dim())
        throw ConfigError("outage_rankK: rank must be in [1, N]");
    if (K > max_quadrature_rank)
        throw ConfigError("outage_rankK: tensor quadrature is limited to K <= 4; use "
                          "montecarlo::simulate_outage_truncated for K = " +
                          std::to_string(K));
    if (workers < 1)
        throw ConfigError("outage_rankK: workers must be positive");

    const auto gh = special::gauss_hermite(quad_order);
    TensorRule rule;
    rule.K = K;
    rule.dims = 2 * (K - 1);
    rule.ports = spec.dim();
    rule.x = x;
    rule.nodes = gh.nodes;
    for (double w : gh.weights)
        rule.weights.push_back(w / sqrt_pi);
    rule.coeff.resize(std::size_t(K) * rule.ports);
    for (std::size_t k = 0; k < std::size_t(K); ++k)
    {
        const double s = std::sqrt(std::max(spec.eigenvalues[k], 0.0));
        for (std::size_t n = 0; n < rule.ports; ++n)
            rule.coeff[k * rule.ports + n] = s * spec.eigenvectors(n, k);
    }

    double sum = 0.0, skipped = 0.0;
    if (rule.dims == 0)
        sum = TensorWalker(rule).leaf_only();
    else
    {
        // One partial per outer node, reduced in index order.
        std::vector<double> partial(std::size_t(quad_order), 0.0), pruned(partial);
        const int used = std::min(workers, quad_order);
        auto run = [&](int first) {
            TensorWalker walker(rule);
            for (int i = first; i < quad_order; i += used)
                partial[std::size_t(i)] = walker.slice(i, pruned[std::size_t(i)]);
        };
        if (used == 1)
            run(0);
        else
        {
            std::vector<std::thread> pool;
            for (int w = 0; w < used; ++w)
                pool.emplace_back(run, w);
            for (auto &t : pool)
                t.join();
        }
        for (int i = 0; i < quad_order; ++i)
        {
            sum += partial[std::size_t(i)];
            skipped += pruned[std::size_t(i)];
        }
    }

    OutageEstimate e;
    e.method = OutageEstimate::Method::rankK;
    e.raw = sum;
    e.p = std::clamp(sum, 0.0, 1.0);
    e.detail = "K=" + std::to_string(K) + " quad_order=" + std::to_string(quad_order) +
               fmt(" pruned_mass=%.3g", skipped) + " reduction=outer-node-order";
    return e;
}

double ergodic_rate_rank1(const EigenSpectrum &spec, double avg_snr)
{
    detail::require_finite(avg_snr, "ergodic_rate_rank1");
    if (!(avg_snr > 0.0))
        throw DomainError("ergodic_rate_rank1: average SNR must be positive");
    const auto r1 = rank1_params(spec);
    const double beta = 1.0 / (avg_snr * r1.lambda1 * r1.c1);
    return special::exp_integral_e1_scaled(beta) / std::numbers::ln2;
}

} // namespace fas::kl
