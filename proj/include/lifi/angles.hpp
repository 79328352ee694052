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

#include <cmath>

namespace lifi {

inline constexpr double kPi = 3.14159265358979323846;

// All public interfaces carry angles in degrees; trigonometry converts at the
// call boundary.
inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Normalize an angle into [0, 360).
inline double wrap_360(double deg)
{
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w >= 360.0 ? 0.0 : w;
}

/// Four-quadrant inverse tangent in degrees, normalized to [0, 360).
inline double atan2_deg(double y, double x)
{
    if (y == 0.0 && x == 0.0)
        return 0.0;
    return wrap_360(rad_to_deg(std::atan2(y, x)));
}

// Exact at quadrant angles, so a 90-degree FOV has cos(psi_c) equal to zero
// rather than 6e-17.
inline double sin_deg(double deg)
{
    const double r = std::fmod(deg, 360.0);
    if (r == 0.0 || r == 180.0 || r == -180.0)
        return 0.0;
    if (r == 90.0 || r == -270.0)
        return 1.0;
    if (r == 270.0 || r == -90.0)
        return -1.0;
    return std::sin(deg_to_rad(deg));
}

inline double cos_deg(double deg)
{
    const double r = std::fmod(deg, 360.0);
    if (r == 90.0 || r == -90.0 || r == 270.0 || r == -270.0)
        return 0.0;
    if (r == 0.0)
        return 1.0;
    if (r == 180.0 || r == -180.0)
        return -1.0;
    return std::cos(deg_to_rad(deg));
}

// acos/asin arguments are clamped only when within rounding distance of the
// boundary; larger excursions are geometrically meaningful and must be
// classified by the caller instead.
inline constexpr double kUnitClampTol = 1e-12;

inline bool clamp_to_unit(double& v)
{
    if (v > 1.0) {
        if (v > 1.0 + kUnitClampTol)
            return false;
        v = 1.0;
    } else if (v < -1.0) {
        if (v < -1.0 - kUnitClampTol)
            return false;
        v = -1.0;
    }
    return true;
}

} // namespace lifi
