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

#include "lifi/geometry.hpp"
#include "lifi/rng.hpp"

namespace lifi {

/// Laplace elevation-angle model truncated to [0, 90] degrees, with the exact
/// truncation normalization. This is the sampling ground truth; closed forms
/// elsewhere may use the lighter tail approximations they were derived with.
class TruncatedLaplace {
public:
    /// mu and sigma in degrees; the scale is b = sigma / sqrt(2).
    TruncatedLaplace(double mu_deg, double sigma_deg);

    static TruncatedLaplace static_user_default() { return {41.0, 7.68}; }

    double mu() const { return mu_; }
    double sigma() const { return sigma_; }
    double b() const { return b_; }
    double lo() const { return 0.0; }
    double hi() const { return 90.0; }

    /// Density per degree; zero outside [0, 90]. Integrates to 1.
    double pdf(double theta_deg) const;

    /// Exact CDF: 0 at 0, 1 at 90, derivative equal to pdf().
    double cdf(double theta_deg) const;

    /// Inverse CDF. u = 0 maps to 0 degrees, u -> 1 maps to 90.
    double quantile(double u) const;

    double sample(Splitmix64& rng) const { return quantile(rng.next_double()); }

private:
    double untruncated_cdf(double theta_deg) const;

    double mu_;
    double sigma_;
    double b_;
    double g_lo_;   // untruncated CDF at 0
    double g_hi_;   // untruncated CDF at 90
    double norm_;   // g_hi_ - g_lo_
};

/// Smallest elevation angle at which the AP leaves the receiver FOV, for one
/// location and facing direction. Beyond the geometric reach of the boundary
/// the link is never (or always) blocked instead.
struct CriticalElevation {
    enum class Kind { Angle, NeverBlocked, AlwaysBlocked };

    Kind kind = Kind::NeverBlocked;
    double theta_ce_deg = 0.0; // valid only for Kind::Angle

    bool never_blocked() const { return kind == Kind::NeverBlocked; }
    bool always_blocked() const { return kind == Kind::AlwaysBlocked; }
};

CriticalElevation critical_elevation(const LinkGeometry& g, double Omega_deg,
                                     double psi_c_deg);

/// Minimum of the critical elevation over all facing directions, attained at
/// Omega = bearing + 180. The raw value can be negative for narrow FOVs close
/// to the AP; in_range flags whether it lies in [0, 90].
struct ThetaThreshold {
    double theta_th_deg = 0.0;
    double omega_th_deg = 0.0; // argmin facing direction
    bool in_range = true;
};

ThetaThreshold theta_threshold(const LinkGeometry& g, double psi_c_deg);

/// Set of facing directions Omega (degrees in [0, 360)) for which the LOS
/// gain is non-zero at a given tilt.
struct OmegaRange {
    enum class Kind { FullCircle, SingleArc, WraparoundPair, Empty };

    Kind kind = Kind::FullCircle;
    double omega_r1 = 0.0;    // endpoints, omega_r1 <= omega_r2
    double omega_r2 = 0.0;
    double measure_deg = 360.0;

    bool contains(double Omega_deg) const;
};

OmegaRange omega_range(const LinkGeometry& g, double theta_deg,
                       double psi_c_deg);

/// Facing directions keeping the LOS active for every tilt in [0, 90]; this
/// is the tilt-90 range. Only applicable when psi_c >= acos(r/d).
struct OmegaRangeAllTheta {
    bool applicable = false;
    OmegaRange range;
};

OmegaRangeAllTheta omega_range_all_theta(const LinkGeometry& g,
                                         double psi_c_deg);

/// Probability that the LOS gain is zero when Omega is uniform on [0, 360).
double prob_los_blocked(const LinkGeometry& g, double theta_deg,
                        double psi_c_deg);

} // namespace lifi
