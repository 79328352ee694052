// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace lifi {

namespace {

struct OrientationSampler {
    const Scenario& scenario;
    TruncatedLaplace laplace;
    bool theta_random;
    bool omega_random;

    explicit OrientationSampler(const Scenario& s)
        : scenario(s),
          laplace(s.orientation.mu_theta, s.orientation.sigma_theta),
          theta_random(s.orientation.theta_model
                       == OrientationConfig::ThetaModel::Laplace),
          omega_random(s.orientation.omega_model
                       == OrientationConfig::OmegaModel::Uniform)
    {
    }

    // Draw indices 2i and 2i+1 are reserved per sample whether or not both
    // are consumed, so fixed/random modes share the same stream layout.
    double theta(std::uint64_t seed, std::uint64_t i) const
    {
        if (!theta_random)
            return scenario.orientation.theta;
        return laplace.quantile(counter_double(seed, 2 * i));
    }

    double omega(std::uint64_t seed, std::uint64_t i) const
    {
        if (!omega_random)
            return scenario.orientation.omega;
        return 360.0 * counter_double(seed, 2 * i + 1);
    }
};

void run_partitioned(std::uint64_t n, int workers,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body)
{
    if (workers <= 1) {
        body(0, n);
        return;
    }
    const std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, n);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, n);
        if (lo >= hi)
            break;
        pool.emplace_back([&, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool)
        t.join();
}

struct MeanAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double v)
    {
        sum += v;
        sum_sq += v * v;
        ++n;
    }

    void merge(const MeanAccumulator& o)
    {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }

    double mean() const { return n > 0 ? sum / n : 0.0; }

    double std_error() const
    {
        if (n < 2)
            return 0.0;
        const double m = mean();
        const double var = std::max(0.0, sum_sq / n - m * m);
        return std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace

void McConfig::validate() const
{
    if (n_samples < 1)
        throw std::domain_error("n_samples must be >= 1");
    if (n_bins < 10)
        throw std::domain_error("n_bins must be >= 10");
    if (workers < 1 || workers > 256)
        throw std::domain_error("workers must lie in [1, 256]");
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double>&& samples,
                                             int n_bins, bool have_range,
                                             double range_lo, double range_hi)
    : n_(samples.size())
{
    positive_.reserve(samples.size());
    for (double v : samples) {
        if (v == 0.0)
            ++zero_count_;
        else
            positive_.push_back(v);
    }
    std::sort(positive_.begin(), positive_.end());

    double lo = range_lo;
    double hi = range_hi;
    if (!have_range) {
        lo = positive_.empty() ? 0.0 : positive_.front();
        hi = positive_.empty() ? 1.0 : positive_.back();
    }
    if (!(hi > lo))
        hi = lo + 1.0;

    edges_.resize(n_bins + 1);
    for (int i = 0; i <= n_bins; ++i)
        edges_[i] = lo + (hi - lo) * i / n_bins;
    counts_.assign(n_bins, 0);
    for (double v : positive_) {
        int idx = static_cast<int>((v - lo) / (hi - lo) * n_bins);
        idx = std::min(std::max(idx, 0), n_bins - 1);
        ++counts_[idx];
    }
}

double EmpiricalDistribution::ecdf(double x) const
{
    if (x < 0.0)
        return 0.0;
    const auto it =
        std::upper_bound(positive_.begin(), positive_.end(), x);
    const auto below = static_cast<std::uint64_t>(it - positive_.begin());
    return static_cast<double>(zero_count_ + below) / static_cast<double>(n_);
}

double EmpiricalDistribution::min_positive() const
{
    if (positive_.empty())
        throw std::domain_error("no positive samples");
    return positive_.front();
}

double EmpiricalDistribution::max_positive() const
{
    if (positive_.empty())
        throw std::domain_error("no positive samples");
    return positive_.back();
}

EmpiricalDistribution simulate_gain(const Scenario& scenario,
                                    const McConfig& cfg)
{
    cfg.validate();
    scenario.validate();

    const LinkGeometry g = scenario.geometry();
    const ChannelConstants cc = scenario.constants();
    const OrientationSampler sampler(scenario);
    const double psi_c = scenario.phy.psi_c;

    std::vector<double> samples(cfg.n_samples);
    run_partitioned(cfg.n_samples, cfg.workers,
                    [&](std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            const double theta = sampler.theta(cfg.seed, i);
                            const double omega = sampler.omega(cfg.seed, i);
                            samples[i] = los_gain(cc, g, theta, omega, psi_c);
                        }
                    });

    // Bin over the analytic support when the gain model applies (random tilt
    // at a fixed facing direction), so histograms are comparable across runs.
    bool have_range = false;
    double lo = 0.0, hi = 0.0;
    if (sampler.theta_random && !sampler.omega_random) {
        const GainDistribution dist =
            gain_distribution(cc, g, scenario.orientation.omega, psi_c,
                              sampler.laplace);
        lo = dist.h_min;
        hi = dist.h_max;
        have_range = hi > lo;
    }
    return EmpiricalDistribution(std::move(samples), cfg.n_bins, have_range,
                                 lo, hi);
}

BerEstimate simulate_ber(const Scenario& scenario, const ModulationOrder& mod,
                         const McConfig& cfg)
{
    cfg.validate();
    scenario.validate();
    if (scenario.orientation.omega_model
        != OrientationConfig::OmegaModel::Fixed)
        throw std::domain_error(
            "the analytic gain model needs a fixed facing direction");
    if (scenario.orientation.theta_model
        != OrientationConfig::ThetaModel::Laplace)
        throw std::domain_error(
            "the analytic gain model needs a random (Laplace) tilt");

    const LinkGeometry g = scenario.geometry();
    const ChannelConstants cc = scenario.constants();
    const GainDistribution dist =
        gain_distribution(cc, g, scenario.orientation.omega,
                          scenario.phy.psi_c, scenario.orientation.laplace());
    const SnrModel m = snr_model(scenario.phy, dist);
    const double atom = 0.5 * dist.c_h * mod.c_m;

    if (dist.degenerate) {
        return {ber_awgn(m.s0 * dist.mu_h * dist.mu_h, mod)
                    * (1.0 - dist.c_h)
                + atom,
                0.0};
    }

    const double mass = dist.continuous_mass();
    if (mass <= 0.0)
        return {atom, 0.0};

    std::vector<MeanAccumulator> partial(cfg.workers);
    const std::uint64_t chunk =
        (cfg.n_samples + cfg.workers - 1) / cfg.workers;

    run_partitioned(cfg.n_samples, cfg.workers,
                    [&](std::uint64_t lo, std::uint64_t hi) {
                        MeanAccumulator acc;
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            const double u = counter_double(cfg.seed, i);
                            const double h =
                                dist.quantile_continuous(u * mass);
                            acc.add(ber_awgn(m.s0 * h * h, mod));
                        }
                        partial[lo / chunk].merge(acc);
                    });

    MeanAccumulator total;
    for (const auto& acc : partial)
        total.merge(acc);

    return {atom + mass * total.mean(), mass * total.std_error()};
}

BerEstimate simulate_ber_orientation(const Scenario& scenario,
                                     const ModulationOrder& mod,
                                     const McConfig& cfg)
{
    cfg.validate();
    scenario.validate();

    const LinkGeometry g = scenario.geometry();
    const ChannelConstants cc = scenario.constants();
    const OrientationSampler sampler(scenario);
    const double psi_c = scenario.phy.psi_c;

    const GainDistribution unit_dist{0.0, 0.0, 0.0, 1.0, 0.0, {}, false};
    const double s0 = snr_model(scenario.phy, unit_dist).s0;

    std::vector<MeanAccumulator> partial(cfg.workers);
    const std::uint64_t chunk =
        (cfg.n_samples + cfg.workers - 1) / cfg.workers;

    run_partitioned(cfg.n_samples, cfg.workers,
                    [&](std::uint64_t lo, std::uint64_t hi) {
                        MeanAccumulator acc;
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            const double theta = sampler.theta(cfg.seed, i);
                            const double omega = sampler.omega(cfg.seed, i);
                            const double h =
                                los_gain(cc, g, theta, omega, psi_c);
                            acc.add(ber_awgn(s0 * h * h, mod));
                        }
                        partial[lo / chunk].merge(acc);
                    });

    MeanAccumulator total;
    for (const auto& acc : partial)
        total.merge(acc);
    return {total.mean(), total.std_error()};
}

double ks_statistic(const EmpiricalDistribution& emp,
                    const std::function<double(double)>& conditioned_cdf)
{
    if (emp.n() < 100)
        throw std::domain_error("need at least 100 samples");
    const auto& xs = emp.sorted_positive();
    if (xs.empty())
        throw std::domain_error(
            "all samples are zero: no continuous part to compare");

    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = conditioned_cdf(xs[i]);
        d = std::max(d, std::abs((i + 1) / n - f));
        d = std::max(d, std::abs(i / n - f));
    }
    return d;
}

std::function<double(double)> conditioned_gain_cdf(const GainDistribution& d)
{
    const double mass = d.continuous_mass();
    if (!(mass > 0.0))
        throw std::domain_error("gain model has no continuous mass");
    return [d, mass](double h) { return (d.cdf(h) - d.c_h) / mass; };
}

} // namespace lifi
