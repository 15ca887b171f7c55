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

#include "fas/outage_estimate.hpp"

namespace fas {

std::string_view to_string(OutageEstimate::Method method)
{
    using M = OutageEstimate::Method;
    switch (method)
    {
    case M::mc: return "mc";
    case M::rank1: return "rank1";
    case M::rank2: return "rank2";
    case M::rankK: return "rankK";
    case M::sandwich_lo: return "sandwich_lo";
    case M::sandwich_hi: return "sandwich_hi";
    case M::continuum: return "continuum";
    case M::piterbarg: return "piterbarg";
    case M::block: return "block";
    }
    return "unknown";
}

} // namespace fas
