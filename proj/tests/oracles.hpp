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

// Independent numerical oracles shared by the unit tests. Nothing here calls
// into the library.

#pragma once

#include <cmath>
#include <functional>

namespace oracle {

// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)> &f, double a, double b, double tol = 1e-12,
                      int depth = 50)
{
    struct Rec {
        static double run(const std::function<double(double)> &f, double a, double b, double fa, double fm,
                          double fb, double whole, double tol, int depth)
        {
            const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return run(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   run(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return Rec::run(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

// Marcum Q1 as a Poisson mixture of Erlang tails:
//   Q1(a, b) = sum_k Pois(k; a^2/2) * P(Gamma(k+1) > b^2/2).
inline double marcum_q1_poisson(double a, double b)
{
    const long double lam = 0.5L * a * a, y = 0.5L * b * b;
    long double pk = std::exp(-lam); // Poisson weight
    long double tail = 0.0L;         // sum_{j<=k} e^{-y} y^j / j!
    long double term = std::exp(-y);
    long double sum = 0.0L;
    for (int k = 0; k < 4000; ++k)
    {
        tail += term;
        sum += pk * tail;
        term *= y / (k + 1);
        pk *= lam / (k + 1);
        if (k > lam + 40 && pk < 1e-30L)
            break;
    }
    return double(sum);
}

} // namespace oracle
