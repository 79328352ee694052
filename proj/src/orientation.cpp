// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/orientation.hpp"

#include <stdexcept>

namespace lifi {

namespace {

// Tolerance for angle-endpoint classification, in degrees.
constexpr double kAngleTol = 1e-9;

} // namespace

TruncatedLaplace::TruncatedLaplace(double mu_deg, double sigma_deg)
    : mu_(mu_deg), sigma_(sigma_deg), b_(sigma_deg / std::sqrt(2.0))
{
    if (!(sigma_ > 0.0))
        throw std::domain_error("elevation sigma must be positive");
    if (!(mu_ >= 0.0 && mu_ <= 90.0))
        throw std::domain_error("elevation mean must lie in [0, 90]");
    g_lo_ = untruncated_cdf(0.0);
    g_hi_ = untruncated_cdf(90.0);
    norm_ = g_hi_ - g_lo_;
}

double TruncatedLaplace::untruncated_cdf(double theta_deg) const
{
    const double z = (theta_deg - mu_) / b_;
    if (z < 0.0)
        return 0.5 * std::exp(z);
    return 1.0 - 0.5 * std::exp(-z);
}

double TruncatedLaplace::pdf(double theta_deg) const
{
    if (theta_deg < 0.0 || theta_deg > 90.0)
        return 0.0;
    return std::exp(-std::abs(theta_deg - mu_) / b_) / (2.0 * b_ * norm_);
}

double TruncatedLaplace::cdf(double theta_deg) const
{
    if (theta_deg <= 0.0)
        return 0.0;
    if (theta_deg >= 90.0)
        return 1.0;
    return (untruncated_cdf(theta_deg) - g_lo_) / norm_;
}

double TruncatedLaplace::quantile(double u) const
{
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("quantile argument must lie in [0, 1]");
    const double p = g_lo_ + u * norm_;
    double theta;
    if (p < 0.5)
        theta = mu_ + b_ * std::log(2.0 * p);
    else
        theta = mu_ - b_ * std::log(2.0 * (1.0 - p));
    if (theta < 0.0)
        return 0.0;
    if (theta > 90.0)
        return 90.0;
    return theta;
}

CriticalElevation critical_elevation(const LinkGeometry& g, double Omega_deg,
                                     double psi_c_deg)
{
    const LambdaCoefficients lc = lambda_coefficients(g, Omega_deg);
    const double amplitude = std::hypot(lc.lambda1, lc.lambda2);

    double arg = cos_deg(psi_c_deg) / amplitude;
    if (!clamp_to_unit(arg)) {
        // The incidence cosine never reaches the FOV boundary; since its peak
        // stays below cos(psi_c), the link is blocked for every tilt.
        return {CriticalElevation::Kind::AlwaysBlocked, 0.0};
    }

    const double theta_ce =
        rad_to_deg(std::acos(arg) + std::atan(lc.lambda1 / lc.lambda2));
    if (theta_ce > 90.0 + kAngleTol)
        return {CriticalElevation::Kind::NeverBlocked, 0.0};
    if (theta_ce < -kAngleTol)
        return {CriticalElevation::Kind::AlwaysBlocked, 0.0};
    return {CriticalElevation::Kind::Angle,
            std::min(std::max(theta_ce, 0.0), 90.0)};
}

ThetaThreshold theta_threshold(const LinkGeometry& g, double psi_c_deg)
{
    ThetaThreshold t;
    t.theta_th_deg = psi_c_deg + rad_to_deg(std::asin(g.h / g.d)) - 90.0;
    t.omega_th_deg = wrap_360(180.0 + g.bearing_deg);
    t.in_range = t.theta_th_deg >= 0.0 && t.theta_th_deg <= 90.0;
    return t;
}

bool OmegaRange::contains(double Omega_deg) const
{
    const double w = wrap_360(Omega_deg);
    switch (kind) {
    case Kind::FullCircle:
        return true;
    case Kind::Empty:
        return false;
    case Kind::SingleArc:
        return w > omega_r1 + kAngleTol && w < omega_r2 - kAngleTol;
    case Kind::WraparoundPair:
        return w < omega_r1 - kAngleTol || w > omega_r2 + kAngleTol;
    }
    return false;
}

OmegaRange omega_range(const LinkGeometry& g, double theta_deg,
                       double psi_c_deg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::domain_error("tilt theta must lie in [0, 90]");

    OmegaRange out;
    const ThetaThreshold th = theta_threshold(g, psi_c_deg);
    if (theta_deg <= th.theta_th_deg) {
        out.kind = OmegaRange::Kind::FullCircle;
        out.measure_deg = 360.0;
        return out;
    }

    const KappaCoefficients kc = kappa_coefficients(g, theta_deg);
    const double cpsi_c = cos_deg(psi_c_deg);

    if (kc.kappa1 < 1e-15) {
        // Nadir or zero tilt: the incidence cosine no longer depends on the
        // facing direction.
        if (kc.kappa2 >= cpsi_c) {
            out.kind = OmegaRange::Kind::FullCircle;
            out.measure_deg = 360.0;
        } else {
            out.kind = OmegaRange::Kind::Empty;
            out.measure_deg = 0.0;
        }
        return out;
    }

    double t = (cpsi_c - kc.kappa2) / kc.kappa1;
    if (t > 1.0 + kUnitClampTol) {
        out.kind = OmegaRange::Kind::Empty;
        out.measure_deg = 0.0;
        return out;
    }
    if (t < -1.0 - kUnitClampTol) {
        out.kind = OmegaRange::Kind::FullCircle;
        out.measure_deg = 360.0;
        return out;
    }
    clamp_to_unit(t);

    const double half_width = rad_to_deg(std::acos(t));
    const double o1 = wrap_360(g.bearing_deg + half_width);
    const double o2 = wrap_360(g.bearing_deg - half_width);
    out.omega_r1 = std::min(o1, o2);
    out.omega_r2 = std::max(o1, o2);
    out.measure_deg = 2.0 * half_width;

    // Sign of the derivative of the incidence cosine in Omega at the first
    // root decides whether the admissible set crosses the 0/360 seam.
    const double slope =
        -kc.kappa1 * sin_deg(out.omega_r1 - g.bearing_deg);
    out.kind = slope < 0.0 ? OmegaRange::Kind::WraparoundPair
                           : OmegaRange::Kind::SingleArc;
    return out;
}

OmegaRangeAllTheta omega_range_all_theta(const LinkGeometry& g,
                                         double psi_c_deg)
{
    OmegaRangeAllTheta out;
    const double validity = rad_to_deg(std::acos(g.r / g.d));
    if (psi_c_deg + kAngleTol < validity) {
        out.applicable = false;
        return out;
    }
    out.applicable = true;
    out.range = omega_range(g, 90.0, psi_c_deg);
    return out;
}

double prob_los_blocked(const LinkGeometry& g, double theta_deg,
                        double psi_c_deg)
{
    return 1.0 - omega_range(g, theta_deg, psi_c_deg).measure_deg / 360.0;
}

} // namespace lifi
