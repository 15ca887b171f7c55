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

#include "fas/fieldmodel.hpp"
#include "fas/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

namespace fas::field {

void ApertureConfig::validate() const
{
    if (!(W > 0.0) || !std::isfinite(W))
        throw ConfigError("aperture W must be positive and finite");
    if (N < 1)
        throw ConfigError("port count N must be at least 1");
}

std::vector<double> port_positions(const ApertureConfig &config)
{
    config.validate();
    std::vector<double> tau(std::size_t(config.N), 0.0);
    if (config.N == 1)
        return tau;
    const double step = config.W / (config.N - 1);
    for (int n = 0; n < config.N; ++n)
        tau[std::size_t(n)] = n * step;
    tau.back() = config.W;
    return tau;
}

CorrMatrix CorrMatrix::from_entries(Matrix entries)
{
    const std::size_t n = entries.rows();
    if (n == 0 || entries.cols() != n)
        throw ConfigError("correlation matrix must be square and non-empty");
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (std::abs(entries(i, i) - 1.0) > tol)
            throw ConfigError("correlation matrix must have unit diagonal");
        for (std::size_t j = 0; j < i; ++j)
        {
            const double v = entries(i, j);
            if (!std::isfinite(v) || std::abs(v - entries(j, i)) > tol)
                throw ConfigError("correlation matrix must be symmetric");
            if (std::abs(v) > 1.0 + tol)
                throw ConfigError("correlation entries must lie in [-1, 1]");
        }
    }
    return CorrMatrix(std::move(entries), std::nullopt);
}

CorrMatrix correlation_matrix(const ApertureConfig &config)
{
    config.validate();
    const std::size_t n = std::size_t(config.N);
    Matrix R(n, n);
    if (n == 1)
    {
        R(0, 0) = 1.0;
        return CorrMatrix(std::move(R), config);
    }
    // Toeplitz: evaluate the kernel once per lag.
    const double step = config.W / (config.N - 1);
    std::vector<double> lag(n);
    for (std::size_t k = 0; k < n; ++k)
        lag[k] = kernels::correlation(config.model, double(k) * step);
    lag[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            R(i, j) = lag[i > j ? i - j : j - i];
    return CorrMatrix(std::move(R), config);
}

CorrMatrix equicorrelated_matrix(int n, double rho)
{
    if (n < 1)
        throw ConfigError("equicorrelated_matrix: n must be positive");
    const auto dim = static_cast<std::size_t>(n);
    Matrix R(dim, dim, rho);
    for (std::size_t i = 0; i < std::size_t(n); ++i)
        R(i, i) = 1.0;
    return CorrMatrix::from_entries(std::move(R));
}

EigenSpectrum eigendecompose(const Matrix &symmetric)
{
    const std::size_t n = symmetric.rows();
    if (n == 0 || symmetric.cols() != n)
        throw ConfigError("eigendecompose: matrix must be square and non-empty");

    Matrix a = symmetric;
    Matrix v = Matrix::identity(n);
    const double threshold = 1e-12 * double(n);
    constexpr int max_sweeps = 100;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    double off = off_norm();
    while (off >= threshold)
    {
        if (sweep == max_sweeps)
            throw NumericalError("eigendecompose: no convergence after 100 sweeps, off-diagonal norm " +
                                 std::to_string(off));
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p)
        {
            for (std::size_t q = p + 1; q < n; ++q)
            {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double app = a(p, p), aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k)
                {
                    if (k == p || k == q)
                        continue;
                    const double akp = a(k, p), akq = a(k, q);
                    const double np = c * akp - s * akq;
                    const double nq = s * akp + c * akq;
                    a(k, p) = a(p, k) = np;
                    a(k, q) = a(q, k) = nq;
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k)
                {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    out.sweeps = sweep;
    out.off_diagonal_norm = off;
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t src = order[k];
        out.eigenvalues[k] = a(src, src);
        std::size_t big = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(big, src)))
                big = r;
        const double sign = v(big, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r)
            out.eigenvectors(r, k) = sign * v(r, src);
    }
    return out;
}

EigenSpectrum eigendecompose(const CorrMatrix &R)
{
    return eigendecompose(R.entries());
}

namespace {

bool try_cholesky(const Matrix &a, double jitter, Matrix &lower)
{
    // Pivots below this are treated as breakdown for unit-diagonal input.
    constexpr double min_pivot = 1e-14;
    const std::size_t n = a.rows();
    lower = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        double d = a(j, j) + jitter;
        const auto lj = lower.row(j);
        for (std::size_t k = 0; k < j; ++k)
            d -= lj[k] * lj[k];
        if (!(d > min_pivot))
            return false;
        const double root = std::sqrt(d);
        lower(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i)
        {
            const auto li = lower.row(i);
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= li[k] * lj[k];
            lower(i, j) = s / root;
        }
    }
    return true;
}

} // namespace

CholeskyFactor cholesky(const Matrix &symmetric)
{
    const std::size_t n = symmetric.rows();
    if (n == 0 || symmetric.cols() != n)
        throw ConfigError("cholesky: matrix must be square and non-empty");
    constexpr double ladder[] = {0.0, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8};
    CholeskyFactor f;
    for (double jitter : ladder)
    {
        if (try_cholesky(symmetric, jitter, f.lower))
        {
            f.jitter = jitter;
            return f;
        }
    }
    throw NumericalError("cholesky: matrix not positive definite after diagonal jitter 1e-8");
}

CholeskyFactor cholesky(const CorrMatrix &R)
{
    return cholesky(R.entries());
}

KlSpec kl_truncate(const EigenSpectrum &spectrum, int K)
{
    const int n = int(spectrum.dim());
    if (K < 1 || K > n)
        throw ConfigError("kl_truncate: rank must be in [1, " + std::to_string(n) + "], got " + std::to_string(K));

    KlSpec kl;
    kl.rank = K;
    kl.eigenvalues.assign(spectrum.eigenvalues.begin(), spectrum.eigenvalues.begin() + K);
    kl.eigenvectors = Matrix(std::size_t(n), std::size_t(K));
    for (std::size_t r = 0; r < std::size_t(n); ++r)
        for (std::size_t k = 0; k < std::size_t(K); ++k)
            kl.eigenvectors(r, k) = spectrum.eigenvectors(r, k);

    double kept = 0.0;
    for (double lam : kl.eigenvalues)
        kept += lam;
    kl.truncation_error = K == n ? 0.0 : std::clamp(1.0 - kept / n, 0.0, 1.0);
    return kl;
}

Matrix low_rank_factor(const CorrMatrix &R, double tol)
{
    const std::size_t n = R.dim();
    std::vector<double> residual(n);
    for (std::size_t i = 0; i < n; ++i)
        residual[i] = R(i, i);

    std::vector<std::vector<double>> cols;
    const double stop = tol * double(n);
    while (cols.size() < n)
    {
        const double trace = std::accumulate(residual.begin(), residual.end(), 0.0);
        if (trace <= stop)
            break;
        const auto it = std::max_element(residual.begin(), residual.end());
        const std::size_t piv = std::size_t(it - residual.begin());
        const double d = *it;
        if (!(d > 0.0))
            break;
        const double root = std::sqrt(d);
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            double s = R(i, piv);
            for (const auto &c : cols)
                s -= c[i] * c[piv];
            col[i] = s / root;
        }
        for (std::size_t i = 0; i < n; ++i)
            residual[i] = std::max(0.0, residual[i] - col[i] * col[i]);
        residual[piv] = 0.0;
        cols.push_back(std::move(col));
    }

    Matrix a(n, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            a(i, k) = cols[k][i];
    return a;
}

void write_matrix_csv(const CorrMatrix &R, std::ostream &out)
{
    char buf[32];
    for (std::size_t i = 0; i < R.dim(); ++i)
    {
        for (std::size_t j = 0; j < R.dim(); ++j)
        {
            std::snprintf(buf, sizeof buf, "%.17g", R(i, j));
            if (j)
                out << ',';
            out << buf;
        }
        out << '\n';
    }
}

} // namespace fas::field
