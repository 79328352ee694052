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

#include "lifi/geometry.hpp"

namespace lifi {

/// Front-end and PHY parameters of one downlink. Defaults are the reference
/// indoor configuration used throughout the tests.
struct PhyParams {
    double a_pd = 1e-4;      // photodetector area, m^2
    double phi_half = 60.0;  // LED semiangle at half power, degrees in (0, 90)
    double varsigma = 1.0;   // concentrator refractive index
    double psi_c = 90.0;     // receiver FOV half-angle, degrees in (0, 90]
    double r_pd = 1.0;       // responsivity, A/W
    double bandwidth = 10e6; // modulation bandwidth, Hz
    int k_total = 1024;      // OFDM subcarriers (even, >= 4)
    double n0 = 1e-21;       // noise PSD, A^2/Hz
    double eta = 3.0;        // DC-bias conversion factor
    double p_opt = 1.0;      // transmitted optical power, W

    static PhyParams defaults() { return PhyParams{}; }
    void validate() const;
};

/// Constants of the LOS gain law for a fixed vertical separation h:
/// H = h0 * cos(psi) / d^(m+2) inside the FOV.
struct ChannelConstants {
    double m = 1.0;   // Lambertian order
    double g_f = 1.0; // concentrator gain
    double h0 = 0.0;  // (m+1) A g_f h^m / (2 pi)
};

ChannelConstants channel_constants(const PhyParams& p, double h);

/// LOS channel gain via the simplified constant form. Incidence at exactly
/// the FOV boundary counts as inside; a receiver facing away from the AP
/// (cos psi < 0) always yields zero, even at a 90-degree FOV.
double los_gain(const ChannelConstants& c, const LinkGeometry& g,
                double theta_deg, double Omega_deg, double psi_c_deg);

/// LOS channel gain from first principles, with the Lambertian emission term
/// explicit. Agrees with los_gain() to rounding; kept as the independent
/// route for cross-checks.
double los_gain_full(const PhyParams& p, const LinkGeometry& g,
                     double theta_deg, double Omega_deg);

} // namespace lifi
