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

#include <string_view>

namespace fas::continuum {

// Which asymptotic family fits the level: Adler-Taylor for moderate x,
// Piterbarg for the deep tail (x >= 6). Advisory only.
enum class Regime { moderate, deep };

std::string_view to_string(Regime regime);
Regime regime_hint(double x);

// `value` is `raw` clipped to [0, 1].
struct ContinuumResult {
    double value = 0.0;
    double raw = 0.0;
    bool clamped = false;
    Regime regime = Regime::moderate;
};

// P(sup chi >= u) ~ e^{-u} (1 + W sqrt(lambda2) u)
ContinuumResult exceedance_adler_taylor(double u, double W, double lambda2);

// 1 - e^{-x} (1 + pi sqrt(2) W x), i.e. the Adler-Taylor form at lambda2 = 2 pi^2.
ContinuumResult outage_continuous(double x, double W);

// Rice upcrossing intensity sqrt(lambda2 / (2 pi)) u e^{-u} of the chi^2(2)
// envelope, and its integral W times that over [0, W].
double rice_upcrossing_rate(double u, double lambda2);
double expected_upcrossings(double u, double W, double lambda2);

// H_alpha c^{1/alpha} W u^{1/alpha} e^{-u}. With alpha = 2, c = pi^2 and
// H_2 = 1/sqrt(pi) this is sqrt(pi) W sqrt(u) e^{-u}.
ContinuumResult exceedance_piterbarg(double u, double W, const kernels::ContinuumParams &params);

// Only alpha = 2 has a closed form (1/sqrt(pi)); other values throw DomainError.
double pickands_constant(double alpha);

// Pointwise term plus expected upcrossings, e^{-u} + W sqrt(lambda2/(2 pi)) u e^{-u}.
ContinuumResult exceedance_euler_heuristic(double u, double W, double lambda2);

// 1 + pi sqrt(2) W x: i.i.d. exponential count matching the continuum outage.
double n_eff(double x, double W);

} // namespace fas::continuum
