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

#include <stdexcept>
#include <string>

#include "lifi/channel.hpp"
#include "lifi/linkstats.hpp"

namespace lifi {

/// Raised on malformed scenario files; message carries the offending
/// line/field.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Device orientation model: the tilt is either pinned or Laplace-distributed,
/// the facing direction either pinned or uniform on the circle.
struct OrientationConfig {
    enum class ThetaModel { Fixed, Laplace };
    enum class OmegaModel { Fixed, Uniform };

    ThetaModel theta_model = ThetaModel::Laplace;
    double theta = 41.0;       // fixed tilt, degrees
    double mu_theta = 41.0;    // Laplace location, degrees
    double sigma_theta = 7.68; // Laplace std deviation, degrees
    OmegaModel omega_model = OmegaModel::Fixed;
    double omega = 45.0;       // facing direction Omega, degrees

    TruncatedLaplace laplace() const
    {
        return {mu_theta, sigma_theta};
    }
};

struct SweepConfig {
    bool active = false;
    std::string variable; // one of: theta, omega, r, p_opt
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

/// The single input record every computation reads: AP and UE placement, PHY
/// parameters, orientation model and an optional sweep request.
struct Scenario {
    Vec3 ap{0.0, 0.0, 2.0};
    Vec3 ue{3.0, 3.0, 0.0};
    PhyParams phy = PhyParams::defaults();
    OrientationConfig orientation;
    SweepConfig sweep;

    void validate() const;

    LinkGeometry geometry() const { return link_geometry(ue, ap); }
    ChannelConstants constants() const
    {
        return channel_constants(phy, ap.z - ue.z);
    }
};

/// Parse from the key-value (sectioned) format or JSON; the two are
/// equivalent. JSON is detected by a leading '{'. Unknown sections or keys
/// are rejected.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

/// Canonical sectioned key-value rendering; parse(serialize(s)) == s and the
/// rendering is byte-stable.
std::string serialize_scenario(const Scenario& s);

std::string serialize_scenario_json(const Scenario& s);

void save_scenario(const Scenario& s, const std::string& path);

bool scenario_equal(const Scenario& a, const Scenario& b);

} // namespace lifi
