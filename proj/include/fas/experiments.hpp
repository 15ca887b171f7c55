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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fas::experiments {

enum class Experiment {
    kernel_compare,
    psd,
    eigen,
    outage_snr,
    outage_aperture,
    dof,
    outage_ports,
    kl_convergence,
    slepian_blocks,
    gauss_error,
};

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
const std::vector<std::string_view> &experiment_names();

// Unset optionals take the per-experiment defaults listed in the README.
struct ExperimentConfig {
    Experiment experiment = Experiment::outage_snr;
    std::vector<kernels::CorrelationModel> models{kernels::CorrelationModel::jakes,
                                                  kernels::CorrelationModel::gaussian};
    std::optional<std::vector<double>> W;
    std::optional<std::vector<int>> N;
    std::optional<std::vector<double>> snr_db;
    double th_db = 0.0;
    std::optional<int> K;
    int quad_order = 24;
    std::optional<std::vector<int>> blocks;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 42;
    int workers = 1;
};

// Fills every unset field with the experiment default and validates the
// result. Throws ConfigError on anything out of range, before any work.
ExperimentConfig resolve(ExperimentConfig config);

struct Table {
    std::vector<std::string> metadata; // without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Runs a resolved configuration.
Table run_experiment(const ExperimentConfig &config);

// Metadata block (version, config, seed, workers, timestamp, experiment
// extras), header row, data rows.
void write_csv(const Table &table, const ExperimentConfig &config, std::ostream &out,
               std::string_view timestamp);

std::string format_number(double v); // 17 significant digits

} // namespace fas::experiments
