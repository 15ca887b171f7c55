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

// Recorded Monte Carlo oracle runs. make_fixtures writes one CSV row per case
// and test_montecarlo replays every case and compares bit for bit.

#pragma once

#include "fas/bounds.hpp"
#include "fas/kl_outage.hpp"
#include "fas/montecarlo.hpp"

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace fixtures {

struct Case {
    std::string key;
    std::uint64_t seed;
    std::uint64_t trials;
    std::function<std::pair<double, double>(const fas::mc::McConfig &)> run;
};

// FNV-1a 64-bit over the case key.
inline std::uint64_t fnv1a(const std::string &s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex(std::uint64_t v)
{
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<Case> cases()
{
    using fas::field::CorrelationModel;
    const auto gauss10 = [] { return fas::field::correlation_matrix({1.0, 10, CorrelationModel::gaussian}); };
    std::vector<Case> out;
    out.push_back({"simulate_outage model=gauss N=10 W=1 x=1 workers=1", 42, 1'000'000,
                   [=](const fas::mc::McConfig &c) {
                       const auto e = fas::mc::simulate_outage(gauss10(), 1.0, c);
                       return std::pair{e.p, *e.std_err};
                   }});
    out.push_back({"simulate_outage model=jakes N=20 W=2 x=3.1622776601683795 workers=1", 42, 200'000,
                   [](const fas::mc::McConfig &c) {
                       const auto R = fas::field::correlation_matrix({2.0, 20, CorrelationModel::jakes});
                       const auto e = fas::mc::simulate_outage(R, 3.1622776601683795, c);
                       return std::pair{e.p, *e.std_err};
                   }});
    out.push_back({"simulate_ergodic_rate model=gauss N=10 W=1 snr=10 workers=1", 42, 200'000,
                   [=](const fas::mc::McConfig &c) {
                       const auto e = fas::mc::simulate_ergodic_rate(gauss10(), 10.0, c);
                       return std::pair{e.mean, e.std_err};
                   }});
    out.push_back({"simulate_outage_truncated model=gauss N=10 W=1 K=1 x=1 workers=1", 42, 200'000,
                   [=](const fas::mc::McConfig &c) {
                       const auto kl = fas::field::kl_truncate(fas::field::eigendecompose(gauss10()), 1);
                       const auto e = fas::mc::simulate_outage_truncated(kl, 1.0, c);
                       return std::pair{e.p, *e.std_err};
                   }});
    out.push_back({"count_upcrossings model=gauss N=400 W=2 u=2 workers=1", 42, 5'000,
                   [](const fas::mc::McConfig &c) {
                       const auto e = fas::mc::count_upcrossings({2.0, 400, CorrelationModel::gaussian}, 2.0, c);
                       return std::pair{e.mean, e.std_err};
                   }});
    out.push_back({"simulate_outage model=gauss N=10 W=1 x=1 workers=3", 7, 300'001,
                   [=](const fas::mc::McConfig &c) {
                       auto cw = c;
                       cw.workers = 3;
                       const auto e = fas::mc::simulate_outage(gauss10(), 1.0, cw);
                       return std::pair{e.p, *e.std_err};
                   }});
    return out;
}

inline const char *header = "config_hash,seed,trials,estimate,std_err";

} // namespace fixtures
