// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/geometry.hpp"

#include <stdexcept>

namespace lifi {

void validate_euler(const EulerAngles& e)
{
    if (!(e.alpha >= 0.0 && e.alpha < 360.0))
        throw std::domain_error("yaw alpha must lie in [0, 360)");
    if (!(e.beta >= -180.0 && e.beta < 180.0))
        throw std::domain_error("pitch beta must lie in [-180, 180)");
    if (!(e.gamma >= -90.0 && e.gamma < 90.0))
        throw std::domain_error("roll gamma must lie in [-90, 90)");
}

Mat3 rotation_matrix(const EulerAngles& e)
{
    validate_euler(e);
    const double ca = cos_deg(e.alpha), sa = sin_deg(e.alpha);
    const double cb = cos_deg(e.beta), sb = sin_deg(e.beta);
    const double cg = cos_deg(e.gamma), sg = sin_deg(e.gamma);

    Mat3 r;
    r.m[0][0] = ca * cg - sa * sb * sg;
    r.m[0][1] = -sa * cb;
    r.m[0][2] = ca * sg + sa * sb * cg;
    r.m[1][0] = sa * cg + ca * sb * sg;
    r.m[1][1] = ca * cb;
    r.m[1][2] = sa * sg - ca * sb * cg;
    r.m[2][0] = -cb * sg;
    r.m[2][1] = sb;
    r.m[2][2] = cb * cg;
    return r;
}

Vec3 rotated_normal(const EulerAngles& e)
{
    const Mat3 r = rotation_matrix(e);
    return {r.m[0][2], r.m[1][2], r.m[2][2]};
}

PolarAzimuth euler_to_polar_azimuth(const EulerAngles& e)
{
    const Vec3 n = rotated_normal(e);
    double cz = n.z;
    if (cz < 0.0) {
        if (cz < -kUnitClampTol)
            throw std::domain_error(
                "polar angle beyond 90 degrees (cos(beta)cos(gamma) < 0) is "
                "outside the model");
        cz = 0.0;
    }
    if (cz > 1.0)
        cz = 1.0;

    PolarAzimuth pa;
    pa.theta = rad_to_deg(std::acos(cz));
    pa.omega = (n.x == 0.0 && n.y == 0.0) ? 0.0 : atan2_deg(n.y, n.x);
    return pa;
}

Pose::Pose(const Vec3& pos, double theta_deg, double omega_deg)
    : position(pos), theta(theta_deg), omega(omega_deg),
      Omega(wrap_360(omega_deg + 180.0))
{
    if (!(theta >= 0.0 && theta <= 90.0))
        throw std::domain_error("polar angle theta must lie in [0, 90]");
    if (!(omega >= 0.0 && omega < 360.0))
        throw std::domain_error("azimuth omega must lie in [0, 360)");
}

Pose pose_from_euler(const Vec3& position, const EulerAngles& e)
{
    const PolarAzimuth pa = euler_to_polar_azimuth(e);
    return Pose{position, pa.theta, pa.omega};
}

LinkGeometry link_geometry(const Vec3& ue, const Vec3& ap)
{
    if (!(ap.z > ue.z))
        throw std::domain_error("the AP must be strictly above the UE");

    const double dx = ue.x - ap.x;
    const double dy = ue.y - ap.y;

    LinkGeometry g;
    g.r = std::hypot(dx, dy);
    g.h = ap.z - ue.z;
    g.d = std::hypot(g.r, g.h);
    g.bearing_deg = (g.r == 0.0) ? 0.0 : atan2_deg(dy, dx);
    return g;
}

LambdaCoefficients lambda_coefficients(const LinkGeometry& g, double Omega_deg)
{
    LambdaCoefficients lc;
    lc.lambda1 = (g.r / g.d) * cos_deg(Omega_deg - g.bearing_deg);
    lc.lambda2 = g.h / g.d;
    return lc;
}

KappaCoefficients kappa_coefficients(const LinkGeometry& g, double theta_deg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::domain_error("tilt theta must lie in [0, 90]");
    KappaCoefficients kc;
    kc.kappa1 = (g.r / g.d) * sin_deg(theta_deg);
    kc.kappa2 = (g.h / g.d) * cos_deg(theta_deg);
    return kc;
}

double cos_incidence(const LinkGeometry& g, double theta_deg, double Omega_deg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::domain_error("tilt theta must lie in [0, 90]");
    const LambdaCoefficients lc = lambda_coefficients(g, Omega_deg);
    return lc.lambda1 * sin_deg(theta_deg) + lc.lambda2 * cos_deg(theta_deg);
}

double cos_radiance(const LinkGeometry& g)
{
    return g.h / g.d;
}

} // namespace lifi
