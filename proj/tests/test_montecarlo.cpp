// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "lifi/montecarlo.hpp"
#include "test_util.hpp"

using namespace lifi;

namespace {

Scenario reference_scenario(double omega)
{
    Scenario s;
    s.ue = testutil::ue_l1();
    s.orientation.theta_model = OrientationConfig::ThetaModel::Laplace;
    s.orientation.mu_theta = 41.0;
    s.orientation.sigma_theta = 7.68;
    s.orientation.omega_model = OrientationConfig::OmegaModel::Fixed;
    s.orientation.omega = omega;
    return s;
}

GainDistribution model_of(const Scenario& s)
{
    return gain_distribution(s.constants(), s.geometry(),
                             s.orientation.omega, s.phy.psi_c,
                             s.orientation.laplace());
}

} // namespace

TEST_CASE("seeded runs are bit-identical and worker-count independent")
{
    const Scenario s = reference_scenario(225.0);
    McConfig cfg;
    cfg.n_samples = 200000;
    cfg.seed = 7;

    const EmpiricalDistribution a = simulate_gain(s, cfg);
    const EmpiricalDistribution b = simulate_gain(s, cfg);
    REQUIRE(a.bin_counts() == b.bin_counts());
    REQUIRE(a.zero_count() == b.zero_count());
    REQUIRE(a.sorted_positive() == b.sorted_positive());

    McConfig cfg8 = cfg;
    cfg8.workers = 8;
    const EmpiricalDistribution c = simulate_gain(s, cfg8);
    REQUIRE(a.bin_counts() == c.bin_counts());
    REQUIRE(a.sorted_positive() == c.sorted_positive());

    McConfig other = cfg;
    other.seed = 8;
    CHECK(simulate_gain(s, other).sorted_positive() != a.sorted_positive());
}

TEST_CASE("fixed orientation collapses the sample distribution")
{
    Scenario s = reference_scenario(45.0);
    s.orientation.theta_model = OrientationConfig::ThetaModel::Fixed;
    s.orientation.theta = 0.0;

    McConfig cfg;
    cfg.n_samples = 1000;
    const EmpiricalDistribution e = simulate_gain(s, cfg);
    CHECK(e.point_mass_at_zero() == 0.0);
    CHECK(e.min_positive() == e.max_positive());

    const double vertical = los_gain(s.constants(), s.geometry(), 0.0,
                                     s.orientation.omega, s.phy.psi_c);
    CHECK(e.min_positive() == vertical);
}

TEST_CASE("zero-gain mass converges to the analytic atom")
{
    const Scenario s = reference_scenario(225.0);
    McConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 20001;
    cfg.workers = 4;

    const EmpiricalDistribution e = simulate_gain(s, cfg);
    const GainDistribution d = model_of(s);

    CHECK(std::abs(e.point_mass_at_zero() - 0.973) < 0.005);
    const double bound =
        4.0 * std::sqrt(d.c_h * (1.0 - d.c_h) / cfg.n_samples);
    CHECK(std::abs(e.point_mass_at_zero() - d.c_h) < bound);
}

TEST_CASE("fully blocked scenario yields a pure atom")
{
    Scenario s = reference_scenario(45.0);
    s.ue = testutil::ue_l4();
    s.phy.psi_c = 30.0;

    McConfig cfg;
    cfg.n_samples = 1000;
    const EmpiricalDistribution e = simulate_gain(s, cfg);
    CHECK(e.point_mass_at_zero() == 1.0);
    CHECK_THROWS_AS(
        ks_statistic(e, [](double) { return 0.5; }), std::domain_error);
}

TEST_CASE("KS statistic: sampling the analytic law itself")
{
    const Scenario s = reference_scenario(45.0);
    const GainDistribution d = model_of(s);
    const double mass = d.continuous_mass();

    const std::uint64_t n = 1000000;
    std::vector<double> xs(n);
    for (std::uint64_t i = 0; i < n; ++i)
        xs[i] = d.quantile_continuous(counter_double(4242, i) * mass);

    const auto cdf = conditioned_gain_cdf(d);
    const double ks = testutil::ks_of_samples(xs, cdf);
    CHECK(ks < 0.002);
}

TEST_CASE("KS statistic flags a mismatched tilt model")
{
    Scenario truth = reference_scenario(45.0);
    truth.orientation.mu_theta = 46.0; // sampled world differs from the model

    McConfig cfg;
    cfg.n_samples = 200000;
    const EmpiricalDistribution e = simulate_gain(truth, cfg);

    const Scenario assumed = reference_scenario(45.0);
    const double ks =
        ks_statistic(e, conditioned_gain_cdf(model_of(assumed)));
    CHECK(ks > 0.05);
}

TEST_CASE("physical sampling vs the analytic model: distribution shape")
{
    McConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 31337;
    cfg.workers = 4;

    // Facing away: the linearized model tracks the physical law closely.
    const Scenario s225 = reference_scenario(225.0);
    const double ks225 = ks_statistic(simulate_gain(s225, cfg),
                                      conditioned_gain_cdf(model_of(s225)));
    CHECK(ks225 < 0.02);

    // Facing the AP the tilt center is near the gain maximum, where the
    // linearization folds mass differently; the shape error stays small but
    // measurable.
    const Scenario s45 = reference_scenario(45.0);
    const double ks45 = ks_statistic(simulate_gain(s45, cfg),
                                     conditioned_gain_cdf(model_of(s45)));
    CHECK(ks45 < 0.05);
}

TEST_CASE("model-law BER sampling agrees with quadrature")
{
    const ModulationOrder m4 = make_modulation(4);
    McConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 555;
    cfg.workers = 4;

    for (double omega : {45.0, 225.0}) {
        const Scenario s = reference_scenario(omega);
        const SnrModel m = snr_model(s.phy, model_of(s));
        const double exact = ber_exact(m, m4);
        const BerEstimate est = simulate_ber(s, m4, cfg);
        REQUIRE(std::abs(est.value - exact)
                <= 3.0 * est.std_error + 1e-9);
    }

    // Degenerate center: both routes collapse to the same closed form.
    Scenario tilted = reference_scenario(45.0);
    const OptimumTilt ot = optimum_tilt(tilted.geometry(), 45.0);
    tilted.orientation.mu_theta = ot.theta_ot_deg;
    const BerEstimate deg = simulate_ber(tilted, m4, cfg);
    const SnrModel md = snr_model(tilted.phy, model_of(tilted));
    CHECK(deg.std_error == 0.0);
    CHECK(deg.value == doctest::Approx(ber_exact(md, m4)).epsilon(1e-12));
}

TEST_CASE("model-law BER sampling: fully blocked gives the exact atom")
{
    Scenario s = reference_scenario(45.0);
    s.ue = testutil::ue_l4();
    s.phy.psi_c = 30.0;

    const ModulationOrder m4 = make_modulation(4);
    McConfig cfg;
    cfg.n_samples = 10000;
    const BerEstimate est = simulate_ber(s, m4, cfg);
    CHECK(est.value == doctest::Approx(0.5 * m4.c_m).epsilon(1e-12));
    CHECK(est.std_error == 0.0);
}

TEST_CASE("standard error shrinks with the sample count")
{
    const Scenario s = reference_scenario(45.0);
    const ModulationOrder m4 = make_modulation(4);

    McConfig small;
    small.n_samples = 100000;
    small.seed = 1;
    McConfig large = small;
    large.n_samples = 200000;

    const double se_small = simulate_ber(s, m4, small).std_error;
    const double se_large = simulate_ber(s, m4, large).std_error;
    CHECK(se_small / se_large == doctest::Approx(std::sqrt(2.0)).epsilon(0.1));
}

TEST_CASE("orientation-sampled BER: deterministic cases")
{
    // Vertical receiver: zero variance, equal to the AWGN BER at the
    // deterministic SNR.
    Scenario vertical = reference_scenario(45.0);
    vertical.orientation.theta_model = OrientationConfig::ThetaModel::Fixed;
    vertical.orientation.theta = 0.0;

    const ModulationOrder m4 = make_modulation(4);
    McConfig cfg;
    cfg.n_samples = 1000;

    const BerEstimate est = simulate_ber_orientation(vertical, m4, cfg);
    const double gain = los_gain(vertical.constants(), vertical.geometry(),
                                 0.0, 45.0, vertical.phy.psi_c);
    const GainDistribution unit{0.0, 0.0, 0.0, 1.0, 0.0, {}, false};
    const double s0 = snr_model(vertical.phy, unit).s0;
    CHECK(est.std_error == 0.0);
    CHECK(est.value
          == doctest::Approx(ber_awgn(s0 * gain * gain, m4)).epsilon(1e-12));
}

TEST_CASE("orientation-sampled BER tracks the model in the benign regime")
{
    Scenario s = reference_scenario(45.0);
    s.phy.p_opt = 0.1;

    const ModulationOrder m4 = make_modulation(4);
    McConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 9001;
    cfg.workers = 4;

    const BerEstimate mc = simulate_ber_orientation(s, m4, cfg);
    const double exact = ber_exact(snr_model(s.phy, model_of(s)), m4);
    // The linearized model carries its own bias, so only coarse agreement is
    // asserted here.
    CHECK(std::abs(mc.value - exact) / exact < 0.01);
}

TEST_CASE("empirical accessors")
{
    const Scenario s = reference_scenario(45.0);
    McConfig cfg;
    cfg.n_samples = 50000;
    cfg.n_bins = 40;

    const EmpiricalDistribution e = simulate_gain(s, cfg);
    CHECK(e.n() == 50000);
    CHECK(e.bin_counts().size() == 40);
    CHECK(e.bin_edges().size() == 41);

    std::uint64_t total = e.zero_count();
    for (std::uint64_t c : e.bin_counts())
        total += c;
    CHECK(total == e.n());

    CHECK(e.ecdf(-1.0) == 0.0);
    CHECK(e.ecdf(e.max_positive()) == 1.0);
    double prev = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double x = e.max_positive() * k / 20.0;
        const double v = e.ecdf(x);
        CHECK(v >= prev);
        prev = v;
    }
}
