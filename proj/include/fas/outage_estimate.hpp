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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fas {

// Uniform result record shared by analytic evaluators, bounds and Monte Carlo.
struct OutageEstimate {
    enum class Method { mc, rank1, rank2, rankK, sandwich_lo, sandwich_hi, continuum, piterbarg, block };

    double p = 0.0;
    Method method = Method::mc;
    std::optional<std::uint64_t> trials; // MC only
    std::optional<double> std_err;       // MC only, sqrt(p (1 - p) / trials)
    bool valid = true;                   // false when an applicability condition fails
    bool clamped = false;                // raw asymptotic value was clipped to [0, 1]
    double raw = 0.0;                    // unclipped value where that differs from p
    std::string detail;                  // free-form provenance, e.g. quadrature settings
};

std::string_view to_string(OutageEstimate::Method method);

} // namespace fas
