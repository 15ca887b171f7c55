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

#include "fas/montecarlo.hpp"
#include "fas/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace fas::mc {

void McConfig::validate() const
{
    if (trials < 1)
        throw ConfigError("Monte Carlo: trials must be at least 1");
    if (workers < 1)
        throw ConfigError("Monte Carlo: workers must be at least 1");
}

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t worker)
{
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state = a ^ (worker * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL);
    std::seed_seq seq{std::uint32_t(splitmix64(state)), std::uint32_t(state >> 32), std::uint32_t(splitmix64(state)),
                      std::uint32_t(state >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t worker) : engine_(seeded_engine(seed, worker)) {}

double Stream::uniform()
{
    return double(engine_() >> 11) * 0x1.0p-53;
}

double Stream::normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do
    {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

void Stream::complex_normal(double &re, double &im)
{
    re = normal() * std::numbers::sqrt2 * 0.5;
    im = normal() * std::numbers::sqrt2 * 0.5;
}

GainSampler::GainSampler(Matrix factor) : a_(std::move(factor))
{
    if (a_.rows() == 0 || a_.cols() == 0)
        throw ConfigError("GainSampler: empty factor");
}

GainSampler GainSampler::from_cholesky(const field::CholeskyFactor &chol)
{
    return GainSampler(chol.lower);
}

GainSampler GainSampler::from_kl(const field::KlSpec &kl)
{
    Matrix a(kl.ports(), std::size_t(kl.rank));
    for (std::size_t k = 0; k < std::size_t(kl.rank); ++k)
    {
        const double s = std::sqrt(std::max(kl.eigenvalues[k], 0.0));
        for (std::size_t n = 0; n < kl.ports(); ++n)
            a(n, k) = s * kl.eigenvectors(n, k);
    }
    return GainSampler(std::move(a));
}

GainSampler GainSampler::for_matrix(const field::CorrMatrix &R)
{
    try
    {
        return from_cholesky(field::cholesky(R));
    }
    catch (const NumericalError &)
    {
        return GainSampler(field::low_rank_factor(R));
    }
}

void GainSampler::draw(Stream &s, std::span<double> z, std::span<double> re, std::span<double> im) const
{
    const std::size_t r = rank();
    for (std::size_t k = 0; k < r; ++k)
        s.complex_normal(z[2 * k], z[2 * k + 1]);
    for (std::size_t n = 0; n < ports(); ++n)
    {
        const auto row = a_.row(n);
        double gr = 0.0, gi = 0.0;
        for (std::size_t k = 0; k < r; ++k)
        {
            gr += row[k] * z[2 * k];
            gi += row[k] * z[2 * k + 1];
        }
        re[n] = gr;
        im[n] = gi;
    }
}

void GainSampler::draw_power(Stream &s, std::span<double> z, std::span<double> power) const
{
    const std::size_t r = rank();
    for (std::size_t k = 0; k < r; ++k)
        s.complex_normal(z[2 * k], z[2 * k + 1]);
    for (std::size_t n = 0; n < ports(); ++n)
    {
        const auto row = a_.row(n);
        double gr = 0.0, gi = 0.0;
        for (std::size_t k = 0; k < r; ++k)
        {
            gr += row[k] * z[2 * k];
            gi += row[k] * z[2 * k + 1];
        }
        power[n] = gr * gr + gi * gi;
    }
}

namespace {

std::uint64_t share(const McConfig &cfg, int w)
{
    const auto W = std::uint64_t(cfg.workers);
    return cfg.trials / W + (std::uint64_t(w) < cfg.trials % W ? 1 : 0);
}

// Runs body(stream, trials, partial) once per worker, each on its own
// stream, and returns the partials in worker order.
template <typename Partial, typename Body>
std::vector<Partial> run_workers(const McConfig &cfg, Body body)
{
    cfg.validate();
    std::vector<Partial> parts(std::size_t(cfg.workers));
    auto job = [&](int w) {
        Stream s(cfg.seed, std::uint64_t(w));
        body(s, share(cfg, w), parts[std::size_t(w)]);
    };
    if (cfg.workers == 1)
        job(0);
    else
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w)
            pool.emplace_back(job, w);
        for (auto &t : pool)
            t.join();
    }
    return parts;
}

OutageEstimate from_count(std::uint64_t hits, std::uint64_t trials)
{
    OutageEstimate e;
    e.method = OutageEstimate::Method::mc;
    e.p = e.raw = double(hits) / double(trials);
    e.trials = trials;
    e.std_err = std::sqrt(e.p * (1.0 - e.p) / double(trials));
    return e;
}

void require_positive(double v, const char *what)
{
    detail::require_finite(v, what);
    if (!(v > 0.0))
        throw DomainError(std::string(what) + ": argument must be positive");
}

} // namespace

std::vector<OutageEstimate> simulate_outage(const GainSampler &sampler, std::span<const double> xs,
                                            const McConfig &cfg)
{
    for (double x : xs)
        require_positive(x, "simulate_outage");
    const std::size_t nx = xs.size();
    const auto parts = run_workers<std::vector<std::uint64_t>>(
        cfg, [&](Stream &s, std::uint64_t trials, std::vector<std::uint64_t> &hits) {
            hits.assign(nx, 0);
            std::vector<double> z(2 * sampler.rank()), power(sampler.ports());
            for (std::uint64_t t = 0; t < trials; ++t)
            {
                sampler.draw_power(s, z, power);
                const double m = *std::max_element(power.begin(), power.end());
                for (std::size_t i = 0; i < nx; ++i)
                    hits[i] += m < xs[i];
            }
        });
    std::vector<OutageEstimate> out;
    for (std::size_t i = 0; i < nx; ++i)
    {
        std::uint64_t h = 0;
        for (const auto &p : parts)
            h += p[i];
        out.push_back(from_count(h, cfg.trials));
    }
    return out;
}

OutageEstimate simulate_outage(const GainSampler &sampler, double x, const McConfig &cfg)
{
    return simulate_outage(sampler, std::span<const double>(&x, 1), cfg).front();
}

OutageEstimate simulate_outage(const field::CorrMatrix &R, double x, const McConfig &cfg)
{
    return simulate_outage(GainSampler::for_matrix(R), x, cfg);
}

OutageEstimate simulate_outage_truncated(const field::KlSpec &kl, double x, const McConfig &cfg)
{
    auto e = simulate_outage(GainSampler::from_kl(kl), x, cfg);
    e.detail = "truncated K=" + std::to_string(kl.rank);
    return e;
}

namespace {

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
};

MeanEstimate reduce(const std::vector<Moments> &parts, std::uint64_t trials)
{
    Moments m;
    for (const auto &p : parts)
    {
        m.sum += p.sum;
        m.sum_sq += p.sum_sq;
    }
    MeanEstimate e;
    e.trials = trials;
    const double T = double(trials);
    e.mean = m.sum / T;
    const double var = trials > 1 ? std::max(0.0, (m.sum_sq - T * e.mean * e.mean) / (T - 1.0)) : 0.0;
    e.std_err = std::sqrt(var / T);
    return e;
}

} // namespace

MeanEstimate simulate_ergodic_rate(const GainSampler &sampler, double avg_snr, const McConfig &cfg)
{
    require_positive(avg_snr, "simulate_ergodic_rate");
    const auto parts = run_workers<Moments>(cfg, [&](Stream &s, std::uint64_t trials, Moments &m) {
        std::vector<double> z(2 * sampler.rank()), power(sampler.ports());
        for (std::uint64_t t = 0; t < trials; ++t)
        {
            sampler.draw_power(s, z, power);
            const double r = std::log2(1.0 + avg_snr * *std::max_element(power.begin(), power.end()));
            m.sum += r;
            m.sum_sq += r * r;
        }
    });
    return reduce(parts, cfg.trials);
}

MeanEstimate simulate_ergodic_rate(const field::CorrMatrix &R, double avg_snr, const McConfig &cfg)
{
    return simulate_ergodic_rate(GainSampler::for_matrix(R), avg_snr, cfg);
}

MeanEstimate count_upcrossings(const field::ApertureConfig &config, double u, const McConfig &cfg)
{
    require_positive(u, "count_upcrossings");
    const GainSampler sampler(field::low_rank_factor(field::correlation_matrix(config)));
    const auto parts = run_workers<Moments>(cfg, [&](Stream &s, std::uint64_t trials, Moments &m) {
        std::vector<double> z(2 * sampler.rank()), power(sampler.ports());
        for (std::uint64_t t = 0; t < trials; ++t)
        {
            sampler.draw_power(s, z, power);
            std::uint64_t c = 0;
            for (std::size_t n = 0; n + 1 < power.size(); ++n)
                c += power[n] < u && u <= power[n + 1];
            m.sum += double(c);
            m.sum_sq += double(c) * double(c);
        }
    });
    return reduce(parts, cfg.trials);
}

OutageEstimate simulate_exceedance(const field::ApertureConfig &config, double u, const McConfig &cfg)
{
    const GainSampler sampler(field::low_rank_factor(field::correlation_matrix(config)));
    auto e = simulate_outage(sampler, u, cfg);
    e.p = e.raw = 1.0 - e.p;
    e.detail = "exceedance rank=" + std::to_string(sampler.rank());
    return e;
}

} // namespace fas::mc
