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

#include "fas/kernels.hpp"
#include "fas/matrix.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace fas::field {

using kernels::CorrelationModel;

// Normalized aperture W (in wavelengths) sampled by N equally spaced ports.
// The mean channel gain is normalized to 1 throughout the library.
struct ApertureConfig {
    double W = 1.0;
    int N = 10;
    CorrelationModel model = CorrelationModel::gaussian;

    void validate() const;
};

// tau_n = (n-1) W / (N-1); a single port sits at 0.
std::vector<double> port_positions(const ApertureConfig &config);

// Symmetric, unit-diagonal correlation matrix with entries in [-1, 1].
class CorrMatrix {
public:
    // Validates symmetry, unit diagonal and entry range (tolerance 1e-12).
    static CorrMatrix from_entries(Matrix entries);

    std::size_t dim() const { return entries_.rows(); }
    const Matrix &entries() const { return entries_; }
    double operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
    const std::optional<ApertureConfig> &source() const { return source_; }

private:
    friend CorrMatrix correlation_matrix(const ApertureConfig &config);
    CorrMatrix(Matrix entries, std::optional<ApertureConfig> source)
        : entries_(std::move(entries)), source_(source) {}

    Matrix entries_;
    std::optional<ApertureConfig> source_;
};

// [R]_{mn} = rho((m - n) W / (N - 1))
CorrMatrix correlation_matrix(const ApertureConfig &config);

// All off-diagonal entries equal to rho.
CorrMatrix equicorrelated_matrix(int n, double rho);

struct EigenSpectrum {
    std::vector<double> eigenvalues; // descending
    Matrix eigenvectors;             // column k pairs with eigenvalue k
    int sweeps = 0;
    double off_diagonal_norm = 0.0;  // at termination

    std::size_t dim() const { return eigenvalues.size(); }
};

// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
// drops below 1e-12 N; throws NumericalError after 100 sweeps.
// Ordering is descending with ties kept in original index order, and each
// eigenvector is signed so its largest-magnitude entry is positive.
EigenSpectrum eigendecompose(const Matrix &symmetric);
EigenSpectrum eigendecompose(const CorrMatrix &R);

struct CholeskyFactor {
    Matrix lower;
    double jitter = 0.0; // added to the diagonal before factorization
};

// Cholesky with a diagonal jitter ladder 0, 1e-12, ..., 1e-8.
// Throws NumericalError if the matrix is not positive definite after 1e-8.
CholeskyFactor cholesky(const Matrix &symmetric);
CholeskyFactor cholesky(const CorrMatrix &R);

// Rank-K Karhunen-Loeve truncation.
struct KlSpec {
    int rank = 0;
    std::vector<double> eigenvalues; // lambda_1..lambda_K
    Matrix eigenvectors;             // N x K
    double truncation_error = 0.0;   // 1 - sum(lambda_1..K) / N

    std::size_t ports() const { return eigenvectors.rows(); }
};

KlSpec kl_truncate(const EigenSpectrum &spectrum, int K);

// A (N x r) with A A^T ~ R from diagonally pivoted partial Cholesky. Stops
// once the residual trace is at most tol * N. Used to sample fields on dense
// grids where R is numerically low rank.
Matrix low_rank_factor(const CorrMatrix &R, double tol = 1e-12);

// Row-major CSV dump of R, 17 significant digits.
void write_matrix_csv(const CorrMatrix &R, std::ostream &out);

} // namespace fas::field
