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

#include "lifi/channel.hpp"
#include "lifi/orientation.hpp"

namespace lifi {

/// Clipped-Laplace model of the LOS gain under a Laplace-distributed tilt at
/// a fixed facing direction. The continuous part lives on [h_min, h_max];
/// c_h is the separate point mass at exactly zero gain (orientation-induced
/// FOV loss). The normalizing factor of the continuous density ignores the
/// lower truncation, so the total mass is close to but not exactly one; it is
/// reported as-is rather than renormalized.
struct GainDistribution {
    double mu_h = 0.0;  // location of the gain Laplace (can sit below h_min)
    double b_h = 0.0;   // scale of the gain Laplace
    double h_min = 0.0; // lower support edge (FOV floor when clipping occurs)
    double h_max = 0.0; // upper support edge
    double c_h = 0.0;   // point mass at zero gain
    CriticalElevation theta_ce;
    bool degenerate = false; // b_h collapsed to zero: all mass at mu_h + atom

    /// 2 - exp(-(h_max - mu_h)/b_h), the continuous-part normalizer.
    double norm_factor() const;

    /// Mass of the continuous part (analytic). For the degenerate case this
    /// is the point-mass weight 1 - c_h.
    double continuous_mass() const;

    /// Continuous density at hbar; zero outside [h_min, h_max]. The zero-gain
    /// point mass is never folded into this value. Throws std::domain_error
    /// when degenerate: callers must take the point-mass path.
    double pdf(double hbar) const;

    /// CDF including the point mass: jumps to c_h at zero, then accumulates
    /// the continuous part across [h_min, h_max]. Throws when degenerate.
    double cdf(double hbar) const;

    /// Inverse of the continuous part: mass v in [0, continuous_mass()] to a
    /// gain in [h_min, h_max]. Throws when degenerate.
    double quantile_continuous(double v) const;
};

GainDistribution gain_distribution(const ChannelConstants& c,
                                   const LinkGeometry& g, double Omega_deg,
                                   double psi_c_deg,
                                   const TruncatedLaplace& d_theta);

/// Electrical-SNR description of one subcarrier: s = s0 * H^2.
struct SnrModel {
    double s0 = 0.0;
    double s_min = 0.0;
    double s_max = 0.0;
    GainDistribution gain;
};

SnrModel snr_model(const PhyParams& p, const GainDistribution& dist);

/// Continuous SNR density on (s_min, s_max); the zero-SNR point mass c_h is
/// exposed through the gain model, never folded in. The 1/sqrt(s) endpoint
/// singularity at s_min = 0 is integrable; quadrature must substitute
/// x = sqrt(s) first.
double snr_pdf(const SnrModel& m, double s);

double snr_cdf(const SnrModel& m, double s);

/// Square-QAM constellation size (4, 16, 64, ...) and its BER prefactor.
struct ModulationOrder {
    int m = 4;
    double c_m = 1.0; // (4/log2 M)(1 - 1/sqrt(M))
};

ModulationOrder make_modulation(int m);

/// Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// Instantaneous M-QAM DCO-OFDM bit-error ratio in AWGN at linear SNR s.
double ber_awgn(double s, const ModulationOrder& mod);

/// Average BER over the random orientation: adaptive quadrature of
/// P_e against the gain density (the sqrt-SNR substitution makes the
/// integrand smooth) plus the blocked mass contributing c_m/2.
double ber_exact(const SnrModel& m, const ModulationOrder& mod);

struct BerApprox {
    double value = 0.0;
    bool clamped = false; // the closed form left [0, c_m/2] and was clamped
};

/// Closed-form approximation of the average BER. Two branches on the location
/// of mu_h relative to the support; clamped into [0, c_m/2] with a flag.
BerApprox ber_approx(const SnrModel& m, const ModulationOrder& mod);

struct OptimumTilt {
    double theta_ot_deg = 0.0;
    bool clamped = false; // facing away: best in-range tilt is 0
};

/// Tilt maximizing the LOS gain: atan(lambda1 / lambda2), floored at 0 when
/// the receiver faces away from the AP.
OptimumTilt optimum_tilt(const LinkGeometry& g, double Omega_deg);

} // namespace lifi
