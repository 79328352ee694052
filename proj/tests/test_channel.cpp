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

#include "lifi/channel.hpp"
#include "lifi/rng.hpp"
#include "test_util.hpp"

using namespace lifi;

TEST_CASE("channel constants from the default parameters")
{
    const PhyParams p = PhyParams::defaults();
    const ChannelConstants c = channel_constants(p, 2.0);

    CHECK(c.m == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.g_f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.h0 == doctest::Approx(2.0 * 1e-4 * 1.0 * 2.0 / (2.0 * kPi))
                      .epsilon(1e-12));
    CHECK(c.h0 == doctest::Approx(6.3662e-5).epsilon(1e-4));

    PhyParams wide = p;
    wide.phi_half = 90.0; // infinite Lambertian order
    CHECK_THROWS_AS(channel_constants(wide, 2.0), std::domain_error);
    CHECK_THROWS_AS(channel_constants(p, 0.0), std::domain_error);
}

TEST_CASE("phy parameter validation")
{
    PhyParams p = PhyParams::defaults();
    p.k_total = 3;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.k_total = 2;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = PhyParams::defaults();
    p.psi_c = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = PhyParams::defaults();
    p.n0 = -1e-21;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("LOS gain at nadir, vertical receiver")
{
    const PhyParams p = PhyParams::defaults();
    const ChannelConstants c = channel_constants(p, 2.0);
    const LinkGeometry g = link_geometry({0, 0, 0}, testutil::ap());

    const double h = los_gain(c, g, 0.0, 0.0, p.psi_c);
    CHECK(h == doctest::Approx(c.h0 / 8.0).epsilon(1e-12));
    CHECK(h == doctest::Approx(7.958e-6).epsilon(1e-3));
}

TEST_CASE("LOS gain vanishes past the critical tilt")
{
    const PhyParams p = PhyParams::defaults();
    const ChannelConstants c = channel_constants(p, 2.0);
    const LinkGeometry g4 = link_geometry(testutil::ue_l4(), testutil::ap());

    CHECK(los_gain(c, g4, 30.0, 45.0, 90.0) == 0.0);
    CHECK(los_gain(c, g4, 20.0, 45.0, 90.0) > 0.0);

    // Facing away: negative incidence cosine is blocked even at FOV 90.
    CHECK(los_gain(c, g4, 50.0, 45.0, 90.0) == 0.0);
}

TEST_CASE("FOV boundary counts as inside")
{
    const PhyParams p = PhyParams::defaults();
    const ChannelConstants c = channel_constants(p, 2.0);
    const LinkGeometry gn = link_geometry({0, 0, 0}, testutil::ap());

    // At nadir the incidence cosine is exactly cos(theta); tilt at the FOV
    // half-angle lands exactly on the boundary.
    const double h = los_gain(c, gn, 60.0, 0.0, 60.0);
    CHECK(h > 0.0);
    CHECK(h == doctest::Approx(c.h0 * cos_deg(60.0) / 8.0).epsilon(1e-12));

    const double blocked = los_gain(c, gn, 60.0001, 0.0, 60.0);
    CHECK(blocked == 0.0);
}

TEST_CASE("first-principles and constant forms agree")
{
    Splitmix64 rng(1234);
    for (int i = 0; i < 10000; ++i) {
        PhyParams p = PhyParams::defaults();
        p.phi_half = 20.0 + 60.0 * rng.next_double();
        p.psi_c = 30.0 + 60.0 * rng.next_double();
        p.varsigma = 1.0 + 0.5 * rng.next_double();

        const Vec3 ue{-5.0 + 10.0 * rng.next_double(),
                      -5.0 + 10.0 * rng.next_double(), 0.0};
        const double h_sep = 1.5 + 1.5 * rng.next_double();
        const Vec3 ap{0.0, 0.0, h_sep};
        const double theta = 90.0 * rng.next_double();
        const double Omega = 360.0 * rng.next_double();

        const LinkGeometry g = link_geometry(ue, ap);
        const ChannelConstants c = channel_constants(p, h_sep);

        const double a = los_gain(c, g, theta, Omega, p.psi_c);
        const double b = los_gain_full(p, g, theta, Omega);
        if (a == 0.0)
            REQUIRE(b == 0.0);
        else
            REQUIRE(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("gain is decreasing in distance and increasing in incidence cosine")
{
    const PhyParams p = PhyParams::defaults();
    const ChannelConstants c = channel_constants(p, 2.0);

    // Same vertical separation, growing horizontal offset, each evaluated at
    // its own optimum tilt so the incidence cosine is 1 throughout.
    double prev = 1e9;
    for (double x : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        const LinkGeometry g = link_geometry({x, 0.0, 0.0}, testutil::ap());
        const LambdaCoefficients lc = lambda_coefficients(g, 0.0);
        const double theta_ot =
            rad_to_deg(std::atan(lc.lambda1 / lc.lambda2));
        const double gain = los_gain(c, g, theta_ot, 0.0, p.psi_c);
        CHECK(gain < prev);
        prev = gain;
    }

    // Fixed geometry: monotone in the incidence cosine.
    const LinkGeometry g1 = link_geometry(testutil::ue_l1(), testutil::ap());
    double prev_gain = -1.0;
    for (double theta : {0.0, 20.0, 40.0, 64.76}) {
        const double gain = los_gain(c, g1, theta, 45.0, p.psi_c);
        CHECK(gain > prev_gain);
        prev_gain = gain;
    }
}
