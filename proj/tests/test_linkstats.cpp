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

#include "lifi/linkstats.hpp"
#include "lifi/rng.hpp"
#include "test_util.hpp"

using namespace lifi;

namespace {

struct Setup {
    PhyParams phy = PhyParams::defaults();
    ChannelConstants cc = channel_constants(phy, 2.0);
    TruncatedLaplace tilt = TruncatedLaplace::static_user_default();
};

GainDistribution dist_at(const Setup& s, const Vec3& ue, double Omega,
                         double psi_c = 90.0)
{
    const LinkGeometry g = link_geometry(ue, testutil::ap());
    return gain_distribution(s.cc, g, Omega, psi_c, s.tilt);
}

double total_mass(const GainDistribution& d)
{
    if (d.h_min >= d.h_max)
        return d.c_h;
    const double cont = testutil::integrate_with_breaks(
        [&](double h) { return d.pdf(h); },
        {d.h_min, std::clamp(d.mu_h, d.h_min, d.h_max), d.h_max}, 1e-10);
    return cont + d.c_h;
}

} // namespace

TEST_CASE("gain model for the facing-away reference scenario")
{
    const Setup s;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 225.0);

    REQUIRE(d.theta_ce.kind == CriticalElevation::Kind::Angle);
    CHECK(std::abs(d.theta_ce.theta_ce_deg - 25.24) < 0.05);
    CHECK(d.c_h == doctest::Approx(0.973).epsilon(1e-3));

    // Blocked scenario: the support floor is the FOV floor, zero here.
    CHECK(d.h_min == 0.0);
    CHECK(d.mu_h < 0.0);

    const LinkGeometry g = link_geometry(testutil::ue_l1(), testutil::ap());
    const LambdaCoefficients lc = lambda_coefficients(g, 225.0);
    const double scale = s.cc.h0 / std::pow(g.d, s.cc.m + 2.0);
    CHECK(d.h_max == doctest::Approx(scale * lc.lambda2).epsilon(1e-12));

    // Two-branch blocked-mass formula, written out.
    const double z = (d.theta_ce.theta_ce_deg - 41.0) / s.tilt.b();
    CHECK(d.c_h == doctest::Approx(1.0 - 0.5 * std::exp(z)).epsilon(1e-12));
}

TEST_CASE("gain model for the facing-toward reference scenario")
{
    const Setup s;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 45.0);

    CHECK(d.theta_ce.never_blocked());
    CHECK(d.c_h == 0.0);
    CHECK(d.h_min < d.mu_h);
    CHECK(d.mu_h < d.h_max);

    const LinkGeometry g = link_geometry(testutil::ue_l1(), testutil::ap());
    const double scale = s.cc.h0 / std::pow(g.d, s.cc.m + 2.0);
    CHECK(d.h_max == doctest::Approx(scale).epsilon(1e-9)); // amplitude is 1
    CHECK(d.h_min == doctest::Approx(scale * 0.42640).epsilon(1e-4));

    // The scale parameter matches a finite-difference slope of the gain in
    // the tilt (per degree) times the tilt scale in degrees.
    const double eps = 1e-5;
    const double slope =
        (cos_incidence(g, 41.0 + eps, 45.0) - cos_incidence(g, 41.0 - eps, 45.0))
        / (2.0 * eps);
    const double expect_b = scale * std::abs(slope) * s.tilt.b();
    CHECK(d.b_h == doctest::Approx(expect_b).epsilon(1e-6));
}

TEST_CASE("gain density and CDF against quadrature")
{
    const Setup s;
    for (double omega : {45.0, 225.0}) {
        const GainDistribution d = dist_at(s, testutil::ue_l1(), omega);

        // Peak value and support edges.
        if (d.mu_h >= d.h_min) {
            CHECK(d.pdf(d.mu_h)
                  == doctest::Approx(1.0 / (d.b_h * d.norm_factor()))
                         .epsilon(1e-12));
        }
        CHECK(d.pdf(d.h_min - 1e-12 - d.h_max * 1e-6) == 0.0);
        CHECK(d.pdf(d.h_max * 1.01) == 0.0);

        // Total mass stays near one (the normalization is approximate).
        CHECK(total_mass(d) > 0.95);
        CHECK(total_mass(d) < 1.05);

        // CDF at the top of the support carries all the mass.
        CHECK(d.cdf(d.h_max) == doctest::Approx(d.c_h + d.continuous_mass())
                                    .epsilon(1e-12));
        CHECK(d.cdf(d.h_min) == doctest::Approx(d.c_h).epsilon(1e-12));
        CHECK(d.cdf(-1e-9) == 0.0);

        // Mid-branch CDF against numerical integration of the density.
        for (double f : {0.15, 0.45, 0.8}) {
            const double h = d.h_min + f * (d.h_max - d.h_min);
            const double q = testutil::integrate_with_breaks(
                [&](double x) { return d.pdf(x); },
                {d.h_min, std::clamp(d.mu_h, d.h_min, h), h}, 1e-10);
            CHECK(d.cdf(h) == doctest::Approx(d.c_h + q).epsilon(1e-6));
        }

        // Monotone.
        double prev = -1.0;
        for (int k = 0; k <= 50; ++k) {
            const double v =
                d.cdf(d.h_min + (d.h_max - d.h_min) * k / 50.0);
            CHECK(v >= prev);
            prev = v;
        }

        // Inverse of the continuous part round-trips.
        for (double f : {0.01, 0.3, 0.7, 0.99}) {
            const double v = f * d.continuous_mass();
            const double h = d.quantile_continuous(v);
            CHECK(d.cdf(h) - d.c_h == doctest::Approx(v).epsilon(1e-9));
        }
    }
}

TEST_CASE("degenerate gain scale at the optimum-tilt center")
{
    const Setup s;
    const LinkGeometry g = link_geometry(testutil::ue_l1(), testutil::ap());
    const OptimumTilt ot = optimum_tilt(g, 45.0);
    const TruncatedLaplace centered(ot.theta_ot_deg, 7.68);

    const GainDistribution d =
        gain_distribution(s.cc, g, 45.0, 90.0, centered);
    REQUIRE(d.degenerate);
    CHECK_THROWS_AS(d.pdf(d.mu_h), std::domain_error);
    CHECK_THROWS_AS(d.cdf(d.mu_h), std::domain_error);

    const SnrModel m = snr_model(s.phy, d);
    const ModulationOrder mod = make_modulation(4);
    const double expect =
        ber_awgn(m.s0 * d.mu_h * d.mu_h, mod) * (1.0 - d.c_h)
        + 0.5 * d.c_h * mod.c_m;
    CHECK(ber_exact(m, mod) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("gain-model mass across random scenarios")
{
    const Setup s;
    Splitmix64 rng(77);
    int tested = 0;
    while (tested < 100) {
        const Vec3 ue{-5.0 + 10.0 * rng.next_double(),
                      -5.0 + 10.0 * rng.next_double(), 0.0};
        const double omega = 360.0 * rng.next_double();
        const double psi_c = 60.0 + 30.0 * rng.next_double();
        const LinkGeometry g = link_geometry(ue, testutil::ap());
        const GainDistribution d =
            gain_distribution(s.cc, g, omega, psi_c, s.tilt);
        if (d.degenerate)
            continue;
        ++tested;
        const double mass = total_mass(d);
        REQUIRE(mass > 0.95);
        REQUIRE(mass < 1.05);
    }
}

TEST_CASE("SNR model constants")
{
    const Setup s;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 45.0);
    const SnrModel m = snr_model(s.phy, d);

    const double sigma_k2 = 1e-21 * 1e7 / 1024.0;
    CHECK(sigma_k2 == doctest::Approx(9.7656e-18).epsilon(1e-4));
    CHECK(m.s0 == doctest::Approx(1.0 / (1022.0 * 9.0 * sigma_k2))
                      .epsilon(1e-12));
    CHECK(m.s0 == doctest::Approx(1.1133e13).epsilon(1e-4));
    CHECK(m.s_min == doctest::Approx(m.s0 * d.h_min * d.h_min).epsilon(1e-12));
    CHECK(m.s_max == doctest::Approx(m.s0 * d.h_max * d.h_max).epsilon(1e-12));

    PhyParams doubled = s.phy;
    doubled.p_opt = 2.0;
    CHECK(snr_model(doubled, d).s0 == doctest::Approx(4.0 * m.s0).epsilon(1e-12));

    const GainDistribution blocked = dist_at(s, testutil::ue_l1(), 225.0);
    CHECK(snr_model(s.phy, blocked).s_min == 0.0);
}

TEST_CASE("SNR density change of variables")
{
    const Setup s;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 45.0);
    const SnrModel m = snr_model(s.phy, d);

    for (int k = 1; k <= 20; ++k) {
        const double snr = m.s_min + (m.s_max - m.s_min) * k / 21.0;
        const double lhs = snr_pdf(m, snr) * 2.0 * std::sqrt(m.s0 * snr);
        const double rhs = d.pdf(std::sqrt(snr / m.s0));
        REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    CHECK(snr_pdf(m, m.s_min * 0.5) == 0.0);
    CHECK(snr_pdf(m, m.s_max * 1.01) == 0.0);
}

TEST_CASE("SNR CDF delegates to the gain CDF and matches quadrature")
{
    const Setup s;
    for (double omega : {45.0, 225.0}) {
        const GainDistribution d = dist_at(s, testutil::ue_l1(), omega);
        const SnrModel m = snr_model(s.phy, d);

        CHECK(snr_cdf(m, m.s_max)
              == doctest::Approx(d.c_h + d.continuous_mass()).epsilon(1e-12));
        // Just above the support floor only the atom has accumulated.
        CHECK(snr_cdf(m, m.s_min + (m.s_max - m.s_min) * 1e-12)
              == doctest::Approx(d.c_h).epsilon(1e-6));

        for (int k = 1; k <= 20; ++k) {
            const double snr = m.s_min + (m.s_max - m.s_min) * k / 21.0;
            REQUIRE(snr_cdf(m, snr)
                    == doctest::Approx(d.cdf(std::sqrt(snr / m.s0)))
                          .epsilon(1e-12));

            // sqrt-substituted quadrature of the SNR density.
            const double lo = std::sqrt(m.s_min);
            const double hi = std::sqrt(snr);
            const double mid = std::clamp(
                std::sqrt(m.s0) * std::max(d.mu_h, 0.0), lo, hi);
            const double q = testutil::integrate_with_breaks(
                [&](double x) { return snr_pdf(m, x * x) * 2.0 * x; },
                {lo, mid, hi}, 1e-10);
            REQUIRE(snr_cdf(m, snr)
                    == doctest::Approx(d.c_h + q).epsilon(1e-5));
        }
    }
}

TEST_CASE("AWGN BER basics")
{
    CHECK(ber_awgn(0.0, make_modulation(4)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(make_modulation(16).c_m == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(ber_awgn(0.0, make_modulation(16))
          == doctest::Approx(0.375).epsilon(1e-15));

    CHECK(ber_awgn(10.0, make_modulation(4))
          == doctest::Approx(7.827e-4).epsilon(1e-3));

    // Tail-integral oracle for the Gaussian Q-function.
    for (double x : {0.5, 1.0, 2.0, 3.1622776601683795}) {
        const double tail = integrate_adaptive(
                                [](double t) {
                                    return std::exp(-0.5 * t * t)
                                         / std::sqrt(2.0 * kPi);
                                },
                                x, x + 40.0, 1e-14)
                                .value;
        CHECK(q_function(x) == doctest::Approx(tail).epsilon(1e-10));
    }

    CHECK_THROWS_AS(make_modulation(8), std::domain_error);
    CHECK_THROWS_AS(make_modulation(2), std::domain_error);
    CHECK_THROWS_AS(make_modulation(32), std::domain_error);
    CHECK_THROWS_AS(ber_awgn(-1.0, make_modulation(4)), std::domain_error);
}

TEST_CASE("average BER: blocked scenarios saturate at the atom")
{
    const Setup s;

    // Facing away with a narrow FOV: no admissible tilt at all.
    const GainDistribution blocked = dist_at(s, testutil::ue_l4(), 45.0, 30.0);
    CHECK(blocked.theta_ce.always_blocked());
    CHECK(blocked.c_h == 1.0);
    const SnrModel mb = snr_model(s.phy, blocked);
    const ModulationOrder m4 = make_modulation(4);
    CHECK(ber_exact(mb, m4) == doctest::Approx(0.5 * m4.c_m).epsilon(1e-12));

    // High power, mostly blocked: both routes converge to the atom floor.
    PhyParams hot = s.phy;
    hot.p_opt = 5.0;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 225.0);
    const SnrModel m = snr_model(hot, d);
    const double floor_val = 0.5 * d.c_h * m4.c_m;
    const double exact = ber_exact(m, m4);
    const BerApprox approx = ber_approx(m, m4);
    CHECK(exact >= floor_val);
    CHECK(std::abs(exact - floor_val) / floor_val < 0.05);
    CHECK(std::abs(approx.value - floor_val) / floor_val < 0.05);
    CHECK_FALSE(approx.clamped);
}

TEST_CASE("average BER approximation in the favorable regime")
{
    const Setup s;
    const GainDistribution d = dist_at(s, testutil::ue_l1(), 45.0);
    const ModulationOrder m4 = make_modulation(4);

    for (double p_opt : {0.1, 0.2, 0.5, 1.0}) {
        PhyParams phy = s.phy;
        phy.p_opt = p_opt;
        const SnrModel m = snr_model(phy, d);

        const double exact = ber_exact(m, m4);
        const BerApprox approx = ber_approx(m, m4);
        // Interior-center branch is the plain AWGN BER at the center SNR.
        CHECK(approx.value
              == doctest::Approx(ber_awgn(m.s0 * d.mu_h * d.mu_h, m4))
                     .epsilon(1e-15));
        CHECK(std::abs(approx.value - exact) / exact <= 0.25);
    }
}

TEST_CASE("average BER is non-increasing in power and floored by the atom")
{
    const Setup s;
    const ModulationOrder m4 = make_modulation(4);

    for (double omega : {45.0, 135.0, 225.0}) {
        const GainDistribution d = dist_at(s, testutil::ue_l1(), omega);
        double prev_exact = 1.0, prev_approx = 1.0;
        for (double p_opt : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            PhyParams phy = s.phy;
            phy.p_opt = p_opt;
            const SnrModel m = snr_model(phy, d);
            const double exact = ber_exact(m, m4);
            const double approx = ber_approx(m, m4).value;
            CHECK(exact <= prev_exact + 1e-12);
            CHECK(approx <= prev_approx + 1e-12);
            CHECK(exact >= 0.5 * d.c_h * m4.c_m - 1e-12);
            prev_exact = exact;
            prev_approx = approx;
        }
    }
}

TEST_CASE("BER approximation clamps instead of going negative")
{
    GainDistribution d;
    d.mu_h = 0.9e-7;
    d.b_h = 1e-7;
    d.h_min = 1e-7; // center below the floor with a fat tail
    d.h_max = 5e-7;
    d.c_h = 0.0;
    d.degenerate = false;

    SnrModel m;
    m.s0 = 1e13;
    m.s_min = m.s0 * d.h_min * d.h_min;
    m.s_max = m.s0 * d.h_max * d.h_max;
    m.gain = d;

    const BerApprox a = ber_approx(m, make_modulation(4));
    CHECK(a.clamped);
    CHECK(a.value == 0.0);
}

TEST_CASE("optimum tilt")
{
    const LinkGeometry g1 = link_geometry(testutil::ue_l1(), testutil::ap());
    const OptimumTilt t = optimum_tilt(g1, 45.0);
    CHECK_FALSE(t.clamped);
    CHECK(std::abs(t.theta_ot_deg - 64.76) < 0.05);

    const LinkGeometry gn = link_geometry({0, 0, 0}, testutil::ap());
    CHECK(optimum_tilt(gn, 123.0).theta_ot_deg == 0.0);

    const OptimumTilt away = optimum_tilt(g1, 225.0);
    CHECK(away.clamped);
    CHECK(away.theta_ot_deg == 0.0);

    // Grid search over the gain confirms the argmax.
    const PhyParams phy = PhyParams::defaults();
    const ChannelConstants cc = channel_constants(phy, 2.0);
    double best = -1.0, best_theta = 0.0;
    for (int k = 0; k <= 9000; ++k) {
        const double v = los_gain(cc, g1, k * 0.01, 45.0, 90.0);
        if (v > best) {
            best = v;
            best_theta = k * 0.01;
        }
    }
    CHECK(std::abs(best_theta - t.theta_ot_deg) <= 0.01 + 1e-9);
}
