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

#include "fas/experiments.hpp"
#include "fas/bounds.hpp"
#include "fas/continuum.hpp"
#include "fas/dof.hpp"
#include "fas/error.hpp"
#include "fas/kl_outage.hpp"
#include "fas/montecarlo.hpp"
#include "fas/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#ifndef FAS_VERSION
#define FAS_VERSION "unknown"
#endif

namespace fas::experiments {

using kernels::CorrelationModel;

namespace {

struct NameEntry {
    Experiment e;
    std::string_view name;
};

constexpr NameEntry names[] = {
    {Experiment::kernel_compare, "kernel-compare"}, {Experiment::psd, "psd"},
    {Experiment::eigen, "eigen"},                   {Experiment::outage_snr, "outage-snr"},
    {Experiment::outage_aperture, "outage-aperture"}, {Experiment::dof, "dof"},
    {Experiment::outage_ports, "outage-ports"},     {Experiment::kl_convergence, "kl-convergence"},
    {Experiment::slepian_blocks, "slepian-blocks"}, {Experiment::gauss_error, "gauss-error"},
};

std::vector<double> sweep(double lo, double hi, double step)
{
    std::vector<double> v;
    const int n = int(std::lround((hi - lo) / step));
    for (int i = 0; i <= n; ++i)
        v.push_back(lo + i * step);
    return v;
}

std::string join(const std::vector<std::string> &parts, std::string_view sep)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
        if (i)
            s += sep;
        s += parts[i];
    }
    return s;
}

template <typename T>
std::string list(const std::optional<std::vector<T>> &v)
{
    if (!v)
        return "default";
    std::vector<std::string> parts;
    for (const T &x : *v)
    {
        if constexpr (std::is_floating_point_v<T>)
            parts.push_back(format_number(x));
        else
            parts.push_back(std::to_string(x));
    }
    return join(parts, ";");
}

std::string tag(CorrelationModel m)
{
    return std::string(kernels::to_string(m));
}

bool has(const ExperimentConfig &c, CorrelationModel m)
{
    return std::find(c.models.begin(), c.models.end(), m) != c.models.end();
}

std::string fmt(double v)
{
    return format_number(v);
}

std::string flag(bool b)
{
    return b ? "1" : "0";
}

mc::McConfig mc_config(const ExperimentConfig &c)
{
    return {*c.trials, c.seed, c.workers};
}

std::vector<double> thresholds(const ExperimentConfig &c)
{
    std::vector<double> xs;
    for (double s : *c.snr_db)
        xs.push_back(kl::normalized_threshold(s, c.th_db));
    return xs;
}

std::string x_line(const ExperimentConfig &c)
{
    std::vector<std::string> parts;
    for (double s : *c.snr_db)
        parts.push_back(fmt(s) + "dB:" + fmt(kl::normalized_threshold(s, c.th_db)));
    return "x: " + join(parts, " ");
}

void require(bool ok, const std::string &msg)
{
    if (!ok)
        throw ConfigError(msg);
}

void require_single(const ExperimentConfig &c, bool w, bool n)
{
    const auto name = std::string(to_string(c.experiment));
    if (w)
        require(c.W->size() == 1, name + " takes a single --W value");
    if (n)
        require(c.N->size() == 1, name + " takes a single --N value");
}

// Dense-grid rule for aperture sweeps: 20 ports per wavelength.
int dense_ports(double W)
{
    return std::max(2, int(std::ceil(20.0 * W)));
}

} // namespace

std::string_view to_string(Experiment e)
{
    for (const auto &n : names)
        if (n.e == e)
            return n.name;
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name)
{
    for (const auto &n : names)
        if (n.name == name)
            return n.e;
    return std::nullopt;
}

const std::vector<std::string_view> &experiment_names()
{
    static const std::vector<std::string_view> v = [] {
        std::vector<std::string_view> out;
        for (const auto &n : names)
            out.push_back(n.name);
        return out;
    }();
    return v;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ExperimentConfig resolve(ExperimentConfig c)
{
    using E = Experiment;
    auto def_W = [&](std::vector<double> v) {
        if (!c.W)
            c.W = std::move(v);
    };
    auto def_N = [&](std::vector<int> v) {
        if (!c.N)
            c.N = std::move(v);
    };
    auto def_snr = [&](std::vector<double> v) {
        if (!c.snr_db)
            c.snr_db = std::move(v);
    };
    auto def_trials = [&](std::uint64_t t) {
        if (!c.trials)
            c.trials = t;
    };

    switch (c.experiment)
    {
    case E::kernel_compare: def_W({3.0}); def_N({301}); break;
    case E::psd: def_W({3.0}); def_N({600}); break;
    case E::eigen: def_W({3.0}); def_N({50}); break;
    case E::outage_snr:
        def_W({1.0}); def_N({10}); def_snr(sweep(-10.0, 20.0, 2.0)); def_trials(100'000);
        break;
    case E::outage_aperture:
        def_W(sweep(0.5, 3.0, 0.5)); def_N({}); def_snr({-5.0, 0.0, 5.0}); def_trials(1'000'000);
        break;
    case E::dof: def_W(sweep(0.5, 5.0, 0.5)); def_N({200}); break;
    case E::outage_ports:
        def_W({1.0, 2.0, 3.0}); def_N({3, 5, 10, 15, 20, 30, 40, 50, 60, 80, 100}); def_snr({-5.0});
        def_trials(100'000);
        break;
    case E::kl_convergence:
        def_W({2.0}); def_N({20}); def_snr({-5.0, 5.0}); def_trials(100'000);
        break;
    case E::slepian_blocks:
        def_W({1.0}); def_N({20}); def_snr(sweep(-10.0, 10.0, 2.5)); def_trials(100'000);
        if (!c.blocks)
            c.blocks = std::vector<int>{1, 2, 4, 8};
        break;
    case E::gauss_error:
        def_W(sweep(0.5, 5.0, 0.5)); def_N({20}); def_snr({-5.0, 0.0, 5.0, 10.0}); def_trials(1'000'000);
        break;
    }
    if (!c.snr_db)
        c.snr_db = std::vector<double>{};
    if (!c.trials)
        c.trials = 0;
    if (!c.blocks)
        c.blocks = std::vector<int>{};

    const auto name = std::string(to_string(c.experiment));
    require(!c.models.empty(), name + ": no correlation model selected");
    require(!c.W->empty(), name + ": --W needs at least one value");
    for (double w : *c.W)
        require(std::isfinite(w) && w > 0.0, name + ": --W values must be positive");
    for (int n : *c.N)
        require(n >= 1, name + ": --N values must be at least 1");
    for (double s : *c.snr_db)
        require(std::isfinite(s), name + ": --snr-db values must be finite");
    require(std::isfinite(c.th_db), name + ": --th-db must be finite");
    require(c.workers >= 1, name + ": --workers must be at least 1");
    require(c.quad_order >= 1 && c.quad_order <= 64, name + ": --quad-order must be in [1, 64]");
    const bool uses_mc = c.experiment == E::outage_snr || c.experiment == E::outage_aperture ||
                         c.experiment == E::outage_ports || c.experiment == E::kl_convergence ||
                         c.experiment == E::slepian_blocks || c.experiment == E::gauss_error;
    if (uses_mc)
    {
        require(*c.trials >= 1, name + ": --trials must be at least 1");
        require(!c.snr_db->empty(), name + ": --snr-db needs at least one value");
    }

    switch (c.experiment)
    {
    case E::kernel_compare:
    case E::eigen:
        require_single(c, true, true);
        require(c.N->front() >= 2, name + ": --N must be at least 2");
        break;
    case E::psd:
        require_single(c, false, true);
        break;
    case E::outage_snr:
        require_single(c, true, true);
        require(c.N->front() >= 2, name + ": --N must be at least 2 for the rank-2 and bound columns");
        break;
    case E::outage_aperture:
        require(c.N->size() <= 1 || c.N->size() == c.W->size(),
                name + ": --N takes one value, or one per --W value");
        break;
    case E::dof:
        require_single(c, false, true);
        break;
    case E::outage_ports:
        break;
    case E::kl_convergence:
        require_single(c, true, true);
        if (c.K)
            require(*c.K >= 1 && *c.K <= c.N->front(), name + ": --K must be in [1, N]");
        else
            c.K = c.N->front();
        break;
    case E::slepian_blocks:
        require_single(c, true, true);
        require(c.N->front() >= 2, name + ": --N must be at least 2");
        require(!c.blocks->empty(), name + ": --blocks needs at least one value");
        for (int b : *c.blocks)
            require(b >= 1 && b <= c.N->front(), name + ": --blocks values must be in [1, N]");
        break;
    case E::gauss_error:
        require_single(c, false, true);
        require(has(c, CorrelationModel::jakes) && has(c, CorrelationModel::gaussian),
                name + ": needs both models");
        break;
    }
    return c;
}

namespace {

Table kernel_compare(const ExperimentConfig &c)
{
    Table t;
    t.header = {"delta", "rho_jakes", "rho_gauss", "abs_error", "bound4"};
    const double W = c.W->front();
    const int n = c.N->front();
    for (int i = 0; i < n; ++i)
    {
        const double d = W * i / (n - 1);
        const auto e = kernels::approx_error(d);
        t.rows.push_back({fmt(d), fmt(kernels::correlation(CorrelationModel::jakes, d)),
                          fmt(kernels::correlation(CorrelationModel::gaussian, d)), fmt(e.actual), fmt(e.bound)});
    }
    return t;
}

Table psd(const ExperimentConfig &c)
{
    Table t;
    t.header = {"f", "psd_jakes", "psd_gauss"};
    const int bins = c.N->front();
    const double lo = -3.0, hi = 3.0, w = (hi - lo) / bins;
    t.metadata.push_back("f grid: bin midpoints on [-3, 3]");
    t.metadata.push_back("leakage_erf: " + fmt(kernels::spectral_leakage()));
    t.metadata.push_back("leakage_numeric: " + fmt(kernels::spectral_leakage_numeric()));
    for (int i = 0; i < bins; ++i)
    {
        const double f = lo + (i + 0.5) * w;
        // Midpoints avoid |f| = 1 unless the bin count puts one there.
        const bool edge = std::abs(std::abs(f) - 1.0) == 0.0;
        t.rows.push_back({fmt(f), edge ? "inf" : fmt(kernels::psd(CorrelationModel::jakes, f)),
                          fmt(kernels::psd(CorrelationModel::gaussian, f))});
    }
    return t;
}

Table eigen(const ExperimentConfig &c)
{
    Table t;
    const double W = c.W->front();
    const int N = c.N->front();
    std::vector<field::EigenSpectrum> specs;
    t.header = {"k"};
    for (auto m : c.models)
    {
        specs.push_back(field::eigendecompose(field::correlation_matrix({W, N, m})));
        t.header.push_back("lambda_over_n_" + tag(m));
        t.header.push_back("cum_energy_" + tag(m));
        t.metadata.push_back("jacobi_sweeps_" + tag(m) + ": " + std::to_string(specs.back().sweeps));
    }
    std::vector<double> acc(specs.size(), 0.0);
    for (int k = 0; k < N; ++k)
    {
        std::vector<std::string> row{std::to_string(k + 1)};
        for (std::size_t s = 0; s < specs.size(); ++s)
        {
            const double l = specs[s].eigenvalues[std::size_t(k)];
            acc[s] += l;
            row.push_back(fmt(l / N));
            row.push_back(fmt(acc[s] / N));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table outage_snr(const ExperimentConfig &c)
{
    Table t;
    const double W = c.W->front();
    const int N = c.N->front();
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));

    std::vector<std::vector<OutageEstimate>> mc_cols;
    t.header = {"snr_db", "x"};
    std::vector<std::string> methods;
    for (auto m : c.models)
    {
        const auto R = field::correlation_matrix({W, N, m});
        mc_cols.push_back(mc::simulate_outage(mc::GainSampler::for_matrix(R), xs, mc_config(c)));
        t.header.push_back("mc_" + tag(m));
        t.header.push_back("std_err_" + tag(m));
        methods.push_back("mc_" + tag(m) + "=mc");
    }
    const auto analytic = has(c, CorrelationModel::gaussian) ? CorrelationModel::gaussian : CorrelationModel::jakes;
    const auto R = field::correlation_matrix({W, N, analytic});
    const auto spec = field::eigendecompose(R);
    t.header.insert(t.header.end(),
                    {"rank1", "rank2", "slepian_lo", "slepian_hi", "continuum", "continuum_clamped"});
    methods.insert(methods.end(), {"rank1=rank1", "rank2=rank2", "slepian_lo=sandwich_lo",
                                   "slepian_hi=sandwich_hi", "continuum=continuum"});
    t.metadata.push_back("analytic_model: " + tag(analytic));
    t.metadata.push_back("rank2: quad_order=" + std::to_string(c.quad_order) + " inner_grid=200");
    t.metadata.push_back("methods: " + join(methods, " "));

    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        const double x = xs[i];
        std::vector<std::string> row{fmt((*c.snr_db)[i]), fmt(x)};
        for (const auto &col : mc_cols)
        {
            row.push_back(fmt(col[i].p));
            row.push_back(fmt(*col[i].std_err));
        }
        const auto sw = bounds::slepian_sandwich(R, x);
        const auto cont = continuum::outage_continuous(x, W);
        row.insert(row.end(), {fmt(kl::outage_rank1(spec, x).p), fmt(kl::outage_rank2(spec, x, c.quad_order).p),
                               fmt(sw.lower.p), fmt(sw.upper.p), fmt(cont.value), flag(cont.clamped)});
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table outage_aperture(const ExperimentConfig &c)
{
    Table t;
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));
    t.metadata.push_back(c.N->empty() ? "ports: N = ceil(20 W)" : "ports: from --N");
    t.header = {"W", "N", "snr_db", "x"};
    std::vector<std::string> methods;
    for (auto m : c.models)
    {
        t.header.push_back("mc_" + tag(m));
        t.header.push_back("std_err_" + tag(m));
        methods.push_back("mc_" + tag(m) + "=mc");
    }
    t.header.insert(t.header.end(), {"continuum", "continuum_raw", "continuum_clamped", "regime"});
    methods.push_back("continuum=continuum");
    t.metadata.push_back("methods: " + join(methods, " "));

    for (std::size_t w = 0; w < c.W->size(); ++w)
    {
        const double W = (*c.W)[w];
        const int N = c.N->empty() ? dense_ports(W) : (c.N->size() == 1 ? c.N->front() : (*c.N)[w]);
        std::vector<std::vector<OutageEstimate>> cols;
        for (auto m : c.models)
            cols.push_back(mc::simulate_outage(mc::GainSampler::for_matrix(field::correlation_matrix({W, N, m})),
                                               xs, mc_config(c)));
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            std::vector<std::string> row{fmt(W), std::to_string(N), fmt((*c.snr_db)[i]), fmt(xs[i])};
            for (const auto &col : cols)
            {
                row.push_back(fmt(col[i].p));
                row.push_back(fmt(*col[i].std_err));
            }
            const auto cont = continuum::outage_continuous(xs[i], W);
            row.insert(row.end(), {fmt(cont.value), fmt(cont.raw), flag(cont.clamped),
                                   std::string(continuum::to_string(cont.regime))});
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table dof_table(const ExperimentConfig &c)
{
    Table t;
    const int N = c.N->front();
    t.header = {"W"};
    for (auto m : c.models)
        t.header.push_back("pr_" + tag(m));
    for (auto m : c.models)
        t.header.push_back("asym_" + tag(m));
    for (auto m : c.models)
        t.header.push_back("limit_" + tag(m));
    t.metadata.push_back("asym: gauss = pi sqrt(2) W, jakes = 2W + 1");
    t.metadata.push_back("limit: N -> infinity participation ratio at fixed W");
    for (double W : *c.W)
    {
        std::vector<std::string> row{fmt(W)};
        for (auto m : c.models)
            row.push_back(fmt(dof::participation_ratio(field::correlation_matrix({W, N, m}))));
        for (auto m : c.models)
            row.push_back(fmt(dof::keff_asymptotic(m, W)));
        for (auto m : c.models)
            row.push_back(fmt(dof::participation_ratio_limit(m, W)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table outage_ports(const ExperimentConfig &c)
{
    Table t;
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));
    t.header = {"W", "N", "snr_db", "x"};
    std::vector<std::string> methods;
    for (auto m : c.models)
    {
        t.header.push_back("mc_" + tag(m));
        t.header.push_back("std_err_" + tag(m));
        methods.push_back("mc_" + tag(m) + "=mc");
    }
    t.header.push_back("continuum");
    methods.push_back("continuum=continuum");
    t.metadata.push_back("methods: " + join(methods, " "));
    for (double W : *c.W)
        for (int N : *c.N)
        {
            std::vector<std::vector<OutageEstimate>> cols;
            for (auto m : c.models)
                cols.push_back(mc::simulate_outage(
                    mc::GainSampler::for_matrix(field::correlation_matrix({W, N, m})), xs, mc_config(c)));
            for (std::size_t i = 0; i < xs.size(); ++i)
            {
                std::vector<std::string> row{fmt(W), std::to_string(N), fmt((*c.snr_db)[i]), fmt(xs[i])};
                for (const auto &col : cols)
                {
                    row.push_back(fmt(col[i].p));
                    row.push_back(fmt(*col[i].std_err));
                }
                row.push_back(fmt(continuum::outage_continuous(xs[i], W).value));
                t.rows.push_back(std::move(row));
            }
        }
    return t;
}

Table kl_convergence(const ExperimentConfig &c)
{
    Table t;
    const double W = c.W->front();
    const int N = c.N->front();
    const int Kmax = *c.K;
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));
    t.metadata.push_back("keff: jakes 2W+1=" + fmt(dof::keff_asymptotic(CorrelationModel::jakes, W)) +
                         " gauss ceil(pi sqrt(2) W)=" +
                         fmt(std::ceil(dof::keff_asymptotic(CorrelationModel::gaussian, W))));
    t.header = {"snr_db", "x", "K"};
    std::vector<std::string> methods;
    for (auto m : c.models)
    {
        for (const char *p : {"trunc_", "std_err_trunc_", "full_", "std_err_full_", "eps_k_"})
            t.header.push_back(p + tag(m));
        methods.push_back("trunc_" + tag(m) + "=mc full_" + tag(m) + "=mc");
    }
    t.metadata.push_back("methods: " + join(methods, " "));

    struct ModelRuns {
        std::vector<std::vector<OutageEstimate>> trunc; // [K-1][x]
        std::vector<double> eps;
        std::vector<OutageEstimate> full;
    };
    std::vector<ModelRuns> runs;
    for (auto m : c.models)
    {
        const auto R = field::correlation_matrix({W, N, m});
        const auto spec = field::eigendecompose(R);
        ModelRuns r;
        for (int K = 1; K <= Kmax; ++K)
        {
            const auto kl = field::kl_truncate(spec, K);
            r.trunc.push_back(mc::simulate_outage(mc::GainSampler::from_kl(kl), xs, mc_config(c)));
            r.eps.push_back(kl.truncation_error);
        }
        r.full = mc::simulate_outage(mc::GainSampler::for_matrix(R), xs, mc_config(c));
        runs.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int K = 1; K <= Kmax; ++K)
        {
            std::vector<std::string> row{fmt((*c.snr_db)[i]), fmt(xs[i]), std::to_string(K)};
            for (const auto &r : runs)
            {
                const auto &e = r.trunc[std::size_t(K - 1)][i];
                row.insert(row.end(), {fmt(e.p), fmt(*e.std_err), fmt(r.full[i].p), fmt(*r.full[i].std_err),
                                       fmt(r.eps[std::size_t(K - 1)])});
            }
            t.rows.push_back(std::move(row));
        }
    return t;
}

Table slepian_blocks(const ExperimentConfig &c)
{
    Table t;
    const double W = c.W->front();
    const int N = c.N->front();
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));
    t.metadata.push_back("methods: bound=block mc=mc sandwich_lo=sandwich_lo sandwich_hi=sandwich_hi");
    t.metadata.push_back("valid: 1 when rho_cross_max <= rho_b_min for every block of size > 1");
    t.header = {"model", "snr_db", "x", "B", "bound", "valid", "rho_cross_max", "mc", "std_err_mc",
                "sandwich_lo", "sandwich_hi"};
    for (auto m : c.models)
    {
        const auto R = field::correlation_matrix({W, N, m});
        const auto sim = mc::simulate_outage(mc::GainSampler::for_matrix(R), xs, mc_config(c));
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            const auto sw = bounds::slepian_sandwich(R, xs[i]);
            for (int B : *c.blocks)
            {
                const auto bb = bounds::block_refined_bound(R, xs[i], B);
                t.rows.push_back({tag(m), fmt((*c.snr_db)[i]), fmt(xs[i]), std::to_string(B), fmt(bb.bound.p),
                                  flag(bb.partition.valid), fmt(bb.partition.rho_cross_max), fmt(sim[i].p),
                                  fmt(*sim[i].std_err), fmt(sw.lower.p), fmt(sw.upper.p)});
            }
        }
    }
    return t;
}

Table gauss_error(const ExperimentConfig &c)
{
    Table t;
    const int N = c.N->front();
    const auto xs = thresholds(c);
    t.metadata.push_back(x_line(c));
    t.metadata.push_back("rel_err: |P_gauss - P_jakes| / P_jakes, common random numbers across models");
    t.header = {"W", "N"};
    for (double s : *c.snr_db)
    {
        const std::string suffix = "_" + fmt(s) + "dB";
        t.header.insert(t.header.end(), {"p_jakes" + suffix, "p_gauss" + suffix, "rel_err" + suffix});
    }
    for (double W : *c.W)
    {
        const auto pj = mc::simulate_outage(
            mc::GainSampler::for_matrix(field::correlation_matrix({W, N, CorrelationModel::jakes})), xs, mc_config(c));
        const auto pg = mc::simulate_outage(
            mc::GainSampler::for_matrix(field::correlation_matrix({W, N, CorrelationModel::gaussian})), xs,
            mc_config(c));
        std::vector<std::string> row{fmt(W), std::to_string(N)};
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            const double rel = pj[i].p > 0.0 ? std::abs(pg[i].p - pj[i].p) / pj[i].p : HUGE_VAL;
            row.insert(row.end(), {fmt(pj[i].p), fmt(pg[i].p), std::isfinite(rel) ? fmt(rel) : "inf"});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace

Table run_experiment(const ExperimentConfig &c)
{
    switch (c.experiment)
    {
    case Experiment::kernel_compare: return kernel_compare(c);
    case Experiment::psd: return psd(c);
    case Experiment::eigen: return eigen(c);
    case Experiment::outage_snr: return outage_snr(c);
    case Experiment::outage_aperture: return outage_aperture(c);
    case Experiment::dof: return dof_table(c);
    case Experiment::outage_ports: return outage_ports(c);
    case Experiment::kl_convergence: return kl_convergence(c);
    case Experiment::slepian_blocks: return slepian_blocks(c);
    case Experiment::gauss_error: return gauss_error(c);
    }
    throw ConfigError("unknown experiment");
}

void write_csv(const Table &table, const ExperimentConfig &c, std::ostream &out, std::string_view timestamp)
{
    std::vector<std::string> models;
    for (auto m : c.models)
        models.push_back(tag(m));
    out << "# fas-extremes " << FAS_VERSION << '\n';
    out << "# experiment: " << to_string(c.experiment) << '\n';
    out << "# config: model=" << join(models, ";") << " W=" << list(c.W) << " N=" << list(c.N)
        << " snr_db=" << list(c.snr_db) << " th_db=" << fmt(c.th_db)
        << " K=" << (c.K ? std::to_string(*c.K) : "default") << " quad_order=" << c.quad_order
        << " blocks=" << list(c.blocks) << " trials=" << (c.trials ? std::to_string(*c.trials) : "default") << '\n';
    out << "# seed: " << c.seed << '\n';
    out << "# workers: " << c.workers << " (trials split evenly, per-worker streams, reduction in worker order)\n";
    out << "# timestamp: " << timestamp << '\n';
    for (const auto &m : table.metadata)
        out << "# " << m << '\n';
    out << join(table.header, ",") << '\n';
    for (const auto &row : table.rows)
        out << join(row, ",") << '\n';
}

} // namespace fas::experiments
