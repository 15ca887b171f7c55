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

#include "fas/specialfn.hpp"
#include "fas/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fas::special {

namespace {

constexpr double series_cutoff = 12.0;

// J0 / J1 power series. Cancellation at |x| = 12 costs about four digits,
// leaving absolute error near 1e-12.
double j0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 200; ++m)
    {
        term *= -q / (double(m) * double(m));
        sum += term;
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum;
}

double j1_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int m = 1; m < 200; ++m)
    {
        term *= -q / (double(m) * double(m + 1));
        sum += term;
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum;
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi; summed up to the smallest term.
double bessel_j_asymptotic(int nu, double x)
{
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(next) >= std::abs(term))
            break; // past the smallest term
        term = next;
        // P collects even k with sign (-1)^{k/2}, Q odd k with sign (-1)^{(k-1)/2}
        switch (k % 4)
        {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        default: p += term; break;
        }
        if (std::abs(term) < 1e-18)
            break;
    }
    const double chi = x - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j0(double x)
{
    detail::require_finite(x, "bessel_j0");
    const double ax = std::abs(x);
    return ax <= series_cutoff ? j0_series(ax) : bessel_j_asymptotic(0, ax);
}

double bessel_j1(double x)
{
    detail::require_finite(x, "bessel_j1");
    const double ax = std::abs(x);
    const double v = ax <= series_cutoff ? j1_series(ax) : bessel_j_asymptotic(1, ax);
    return x < 0.0 ? -v : v;
}

double erf(double x)
{
    detail::require_finite(x, "erf");
    return std::erf(x);
}

double exp_integral_e1_scaled(double x)
{
    detail::require_finite(x, "exp_integral_e1");
    if (x <= 0.0)
        throw DomainError("exp_integral_e1: argument must be positive");

    if (x <= 1.0)
    {
        // E1 = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double term = 1.0, sum = 0.0;
        for (int k = 1; k < 100; ++k)
        {
            term *= -x / k;
            const double t = term / k;
            sum += t;
            if (std::abs(t) < 1e-18 * std::abs(sum))
                break;
        }
        return std::exp(x) * (-euler_gamma - std::log(x) - sum);
    }

    // Modified Lentz evaluation of the continued fraction for exp(x) E1(x).
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i)
    {
        const double an = -double(i) * double(i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h;
    }
    throw NumericalError("exp_integral_e1: continued fraction did not converge");
}

double exp_integral_e1(double x)
{
    return exp_integral_e1_scaled(x) * std::exp(-x);
}

double bessel_i0_scaled(double x)
{
    detail::require_finite(x, "bessel_i0");
    const double ax = std::abs(x);
    if (ax <= 30.0)
    {
        const double q = 0.25 * ax * ax;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 500; ++k)
        {
            term *= q / (double(k) * double(k));
            sum += term;
            if (term < 1e-17 * sum)
                break;
        }
        return sum * std::exp(-ax);
    }
    // exp(-x) I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        const double next = term * odd * odd / (k * 8.0 * ax);
        if (next >= term)
            break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum / std::sqrt(2.0 * pi * ax);
}

double bessel_i0(double x)
{
    return bessel_i0_scaled(x) * std::exp(std::abs(x));
}

double marcum_q1(double a, double b)
{
    detail::require_finite(a, "marcum_q1");
    detail::require_finite(b, "marcum_q1");
    if (a < 0.0 || b < 0.0)
        throw DomainError("marcum_q1: arguments must be nonnegative");
    if (b == 0.0)
        return 1.0;
    if (a == 0.0)
        return std::exp(-0.5 * b * b);

    // Q1 = exp(-(a^2+b^2)/2) sum_{k>=0} (a/b)^k I_k(ab)          (a < b)
    // 1 - Q1 = exp(-(a^2+b^2)/2) sum_{k>=1} (b/a)^k I_k(ab)      (a >= b)
    // Both series are summed with ratio r = min/max <= 1 and I_k / I_0 built
    // from backward-recurrence ratios, so no Bessel value overflows.
    const double z = a * b;
    const double r = a < b ? a / b : b / a;
    const double diff = a - b;
    const double lead = std::exp(-0.5 * diff * diff) * bessel_i0_scaled(z);
    if (lead == 0.0)
        return a < b ? 0.0 : 1.0;

    // I_k(z)/I_0(z) ~ exp(-k^2 / (2 z)) for k << z; combine with r^k to size the sum.
    constexpr double log_eps = -41.5; // ln(1e-18)
    const double k_gauss = -log_eps + std::sqrt(log_eps * log_eps - 2.0 * log_eps * z);
    const double k_geom = r < 1.0 ? log_eps / std::log(r) : std::numeric_limits<double>::infinity();
    int terms = int(std::ceil(std::min(k_gauss, k_geom))) + 8;

    std::vector<double> ratio;
    for (int attempt = 0; attempt < 6; ++attempt)
    {
        // r_j = I_j / I_{j-1} = 1 / (2j/z + r_{j+1}), started well above both
        // the summation range and z.
        const int start = terms + int(std::ceil(z)) + 40;
        ratio.assign(std::size_t(terms) + 1, 0.0);
        double rj = 0.0;
        for (int j = start; j >= 1; --j)
        {
            rj = 1.0 / (2.0 * j / z + rj);
            if (j <= terms)
                ratio[std::size_t(j)] = rj;
        }

        double sum = a < b ? 1.0 : 0.0;
        double ik = 1.0, rk = 1.0, last = 0.0;
        for (int k = 1; k <= terms; ++k)
        {
            ik *= ratio[std::size_t(k)];
            rk *= r;
            last = rk * ik;
            sum += last;
        }
        if (last <= 1e-17 * std::max(sum, 1.0))
        {
            const double tail = lead * sum;
            const double q = a < b ? tail : 1.0 - tail;
            return std::clamp(q, 0.0, 1.0);
        }
        terms *= 2;
    }
    throw NumericalError("marcum_q1: series did not converge for a=" + std::to_string(a) +
                         ", b=" + std::to_string(b));
}

QuadratureRule gauss_hermite(int order)
{
    if (order < 1 || order > 64)
        throw ConfigError("gauss_hermite: order must be in [1, 64], got " + std::to_string(order));

    const int n = order;
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i)
    {
        // Asymptotic initial guesses for the largest roots, then extrapolation.
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(double(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[std::size_t(i - 2)];

        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it)
        {
            // Orthonormal Hermite recurrence.
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z)))
            {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw NumericalError("gauss_hermite: Newton iteration failed for order " + std::to_string(n));
        if (2 * i + 1 == n)
            z = 0.0;
        x[std::size_t(i)] = z;
        x[std::size_t(n - 1 - i)] = -z;
        w[std::size_t(i)] = 2.0 / (pp * pp);
        w[std::size_t(n - 1 - i)] = w[std::size_t(i)];
    }

    QuadratureRule rule;
    rule.order = n;
    rule.nodes.assign(x.rbegin(), x.rend());
    rule.weights.assign(w.rbegin(), w.rend());
    return rule;
}

QuadratureRule gauss_legendre(int order, double lo, double hi)
{
    if (order < 1)
        throw ConfigError("gauss_legendre: order must be positive");
    detail::require_finite(lo, "gauss_legendre");
    detail::require_finite(hi, "gauss_legendre");

    const int n = order;
    const double mid = 0.5 * (hi + lo), half_len = 0.5 * (hi - lo);
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(std::size_t(n));
    rule.weights.resize(std::size_t(n));
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it)
        {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        if (2 * i + 1 == n)
            z = 0.0;
        // z runs from the largest root downward
        rule.nodes[std::size_t(i)] = mid - half_len * z;
        rule.nodes[std::size_t(n - 1 - i)] = mid + half_len * z;
        const double wt = 2.0 * half_len / ((1.0 - z * z) * pp * pp);
        rule.weights[std::size_t(i)] = wt;
        rule.weights[std::size_t(n - 1 - i)] = wt;
    }
    return rule;
}

} // namespace fas::special
