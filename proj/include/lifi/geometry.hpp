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

#include <array>

#include "lifi/angles.hpp"

namespace lifi {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity()
    {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }

    Mat3 operator*(const Mat3& o) const
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Vec3 operator*(const Vec3& v) const
    {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 transpose() const
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }

    double det() const
    {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

/// Intrinsic yaw/pitch/roll of the handset, in degrees.
/// alpha in [0, 360), beta in [-180, 180), gamma in [-90, 90).
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct PolarAzimuth {
    double theta = 0.0; // polar angle of the device normal, degrees in [0, 90]
    double omega = 0.0; // azimuth of the device normal, degrees in [0, 360)
};

/// Device placement: position plus normal-vector direction. Omega is the
/// user's facing direction, always (omega + 180) mod 360.
struct Pose {
    Vec3 position;
    double theta = 0.0;
    double omega = 0.0;
    double Omega = 180.0;

    Pose() = default;
    Pose(const Vec3& pos, double theta_deg, double omega_deg);
};

/// Fixed horizontal/vertical decomposition of one AP-to-UE link.
struct LinkGeometry {
    double r = 0.0;           // horizontal distance, m
    double h = 0.0;           // vertical distance (AP above UE), m
    double d = 0.0;           // Euclidean distance, m
    double bearing_deg = 0.0; // four-quadrant angle of the AP->UE horizontal ray
};

struct LambdaCoefficients {
    double lambda1 = 0.0; // (r/d) cos(Omega - bearing), sign tracks facing
    double lambda2 = 0.0; // h/d, always positive
};

struct KappaCoefficients {
    double kappa1 = 0.0; // (r/d) sin(theta), >= 0
    double kappa2 = 0.0; // (h/d) cos(theta), >= 0
};

void validate_euler(const EulerAngles& e);

/// Concatenated intrinsic rotation about z (yaw), x (pitch), y (roll).
/// Entries are the closed-form product, so rotated_normal() is exactly the
/// third column.
Mat3 rotation_matrix(const EulerAngles& e);

/// Unit normal of the device screen after rotation; [0,0,1] at rest.
Vec3 rotated_normal(const EulerAngles& e);

/// Polar/azimuth pair of the rotated normal. Requires cos(beta)cos(gamma) >= 0
/// (theta beyond 90 degrees is outside the model and rejected). At theta = 0
/// the azimuth is undefined and reported as 0.
PolarAzimuth euler_to_polar_azimuth(const EulerAngles& e);

Pose pose_from_euler(const Vec3& position, const EulerAngles& e);

/// Decompose the AP-UE link. The AP must be strictly above the UE.
LinkGeometry link_geometry(const Vec3& ue, const Vec3& ap);

LambdaCoefficients lambda_coefficients(const LinkGeometry& g, double Omega_deg);

KappaCoefficients kappa_coefficients(const LinkGeometry& g, double theta_deg);

/// cos of the incidence angle at the receiver for tilt theta and facing
/// direction Omega: lambda1 sin(theta) + lambda2 cos(theta).
double cos_incidence(const LinkGeometry& g, double theta_deg, double Omega_deg);

/// cos of the radiance angle at the downward-facing transmitter: h/d.
double cos_radiance(const LinkGeometry& g);

} // namespace lifi
