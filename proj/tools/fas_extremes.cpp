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

// fas-extremes: experiment driver writing CSV datasets.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage or configuration error.

#include "fas/error.hpp"
#include "fas/experiments.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

namespace fx = fas::experiments;

constexpr int exit_numerical = 1;
constexpr int exit_usage = 2;

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int fail(int code, const std::string &msg)
{
    std::cerr << "fas-extremes: " << msg << '\n';
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Outage datasets for continuous-aperture fluid antenna systems"};
    app.set_version_flag("--version", std::string("fas-extremes ") + FAS_VERSION);

    std::string experiment;
    std::string model = "both";
    std::vector<double> W, snr_db;
    std::vector<int> N, blocks;
    double th_db = 0.0;
    int K = 0, quad_order = 24;
    std::uint64_t trials = 0, seed = 42;
    int workers = int(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_path;

    std::string names;
    for (auto n : fx::experiment_names())
        names += (names.empty() ? "" : ", ") + std::string(n);
    app.add_option("experiment", experiment, "One of: " + names)->required();
    app.add_option("--model", model, "jakes, gauss or both")->check(CLI::IsMember({"jakes", "gauss", "both"}));
    auto *o_W = app.add_option("--W", W, "Normalized aperture(s), comma separated")->delimiter(',');
    auto *o_N = app.add_option("--N", N, "Port count(s), comma separated")->delimiter(',');
    auto *o_snr = app.add_option("--snr-db", snr_db, "Average SNR(s) in dB, comma separated")->delimiter(',');
    app.add_option("--th-db", th_db, "SNR threshold in dB");
    auto *o_K = app.add_option("--K", K, "Largest truncation order (kl-convergence)");
    app.add_option("--quad-order", quad_order, "Quadrature order for the rank-2 evaluator");
    auto *o_blocks = app.add_option("--blocks", blocks, "Block counts (slepian-blocks)")->delimiter(',');
    auto *o_trials = app.add_option("--trials", trials, "Monte Carlo trials per point");
    auto *o_seed = app.add_option("--seed", seed, "RNG seed (fallback: FAS_SEED)");
    app.add_option("--workers", workers, "Monte Carlo worker threads");
    app.add_option("--out", out_path, "Output CSV path (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_usage;
    }

    fx::ExperimentConfig cfg;
    const auto parsed = fx::parse_experiment(experiment);
    if (!parsed)
        return fail(exit_usage, "unknown experiment '" + experiment + "' (expected one of: " + names + ")");
    cfg.experiment = *parsed;
    if (model == "jakes")
        cfg.models = {fas::kernels::CorrelationModel::jakes};
    else if (model == "gauss")
        cfg.models = {fas::kernels::CorrelationModel::gaussian};
    if (o_W->count())
        cfg.W = W;
    if (o_N->count())
        cfg.N = N;
    if (o_snr->count())
        cfg.snr_db = snr_db;
    cfg.th_db = th_db;
    if (o_K->count())
        cfg.K = K;
    cfg.quad_order = quad_order;
    if (o_blocks->count())
        cfg.blocks = blocks;
    if (o_trials->count())
        cfg.trials = trials;
    if (o_seed->count())
        cfg.seed = seed;
    else if (const char *env = std::getenv("FAS_SEED"))
    {
        try
        {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used, 0);
            if (used != std::string(env).size())
                throw std::invalid_argument(env);
        }
        catch (const std::exception &)
        {
            return fail(exit_usage, "FAS_SEED is not an unsigned integer");
        }
    }
    cfg.workers = workers;

    try
    {
        cfg = fx::resolve(cfg);
    }
    catch (const fas::ConfigError &e)
    {
        return fail(exit_usage, e.what());
    }

    const std::string tmp_path = out_path.empty() ? "" : out_path + ".partial";
    try
    {
        const auto table = fx::run_experiment(cfg);
        std::ostringstream body;
        fx::write_csv(table, cfg, body, utc_timestamp());
        if (out_path.empty())
        {
            std::cout << body.str();
            std::cout.flush();
            if (!std::cout)
                throw std::runtime_error("failed writing to standard output");
            return 0;
        }
        {
            std::ofstream f(tmp_path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw std::runtime_error("cannot open " + tmp_path);
            f << body.str();
            f.close();
            if (!f)
                throw std::runtime_error("failed writing " + tmp_path);
        }
        std::filesystem::rename(tmp_path, out_path);
        return 0;
    }
    catch (const fas::ConfigError &e)
    {
        std::error_code ec;
        if (!tmp_path.empty())
            std::filesystem::remove(tmp_path, ec);
        return fail(exit_usage, e.what());
    }
    catch (const std::exception &e)
    {
        std::error_code ec;
        if (!tmp_path.empty())
            std::filesystem::remove(tmp_path, ec);
        return fail(exit_numerical, e.what());
    }
}
