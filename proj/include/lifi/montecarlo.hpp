// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lifi/scenario.hpp"

namespace lifi {

struct McConfig {
    std::uint64_t n_samples = 1000000;
    std::uint64_t seed = 20001;
    int n_bins = 100;
    int workers = 1;

    void validate() const;
};

/// Summary of one seeded sampling run: a histogram of the positive part, the
/// sorted samples backing an ECDF, and the fraction of exactly-zero draws.
/// Per-sample counter-based seeding makes the result independent of the
/// worker count and scheduling.
class EmpiricalDistribution {
public:
    EmpiricalDistribution(std::vector<double>&& samples, int n_bins,
                          bool have_range, double range_lo, double range_hi);

    std::uint64_t n() const { return n_; }
    std::uint64_t zero_count() const { return zero_count_; }
    double point_mass_at_zero() const
    {
        return static_cast<double>(zero_count_) / static_cast<double>(n_);
    }

    const std::vector<double>& sorted_positive() const { return positive_; }
    const std::vector<double>& bin_edges() const { return edges_; }
    const std::vector<std::uint64_t>& bin_counts() const { return counts_; }

    /// ECDF over all samples, the zero atom included.
    double ecdf(double x) const;

    double min_positive() const;
    double max_positive() const;

private:
    std::uint64_t n_ = 0;
    std::uint64_t zero_count_ = 0;
    std::vector<double> positive_; // sorted ascending
    std::vector<double> edges_;    // n_bins + 1 edges
    std::vector<std::uint64_t> counts_;
};

struct BerEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Sample LOS gains under the scenario's orientation model (tilt and facing
/// drawn per sample, gain evaluated geometrically). Zero gains accumulate in
/// the point mass. Deterministic for a fixed seed.
EmpiricalDistribution simulate_gain(const Scenario& scenario,
                                    const McConfig& cfg);

/// Monte-Carlo evaluation of the average-BER integral against the analytic
/// gain model: continuous draws by inverse CDF weighted with the analytic
/// continuous mass, plus the exact zero-gain atom term. This is the sampling
/// route to the same quantity ber_exact() integrates; requires a fixed facing
/// direction.
BerEstimate simulate_ber(const Scenario& scenario, const ModulationOrder& mod,
                         const McConfig& cfg);

/// Average BER by sampling physical orientations: per sample the gain is
/// computed geometrically and the AWGN BER at the resulting SNR is averaged.
/// Blocked samples contribute c_m/2.
BerEstimate simulate_ber_orientation(const Scenario& scenario,
                                     const ModulationOrder& mod,
                                     const McConfig& cfg);

/// Sup-norm distance between the empirical CDF conditioned on positive
/// samples and an analytic CDF conditioned the same way. The conditioned
/// analytic CDF must map the positive support onto [0, 1].
double ks_statistic(const EmpiricalDistribution& emp,
                    const std::function<double(double)>& conditioned_cdf);

/// Conditioned analytic gain CDF matching ks_statistic's convention.
std::function<double(double)> conditioned_gain_cdf(const GainDistribution& d);

} // namespace lifi
