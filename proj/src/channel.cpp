// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/channel.hpp"

#include <stdexcept>

namespace lifi {

void PhyParams::validate() const
{
    if (!(a_pd > 0.0))
        throw std::domain_error("photodetector area must be positive");
    if (!(phi_half > 0.0 && phi_half < 90.0))
        throw std::domain_error("LED semiangle must lie in (0, 90)");
    if (!(varsigma > 0.0))
        throw std::domain_error("refractive index must be positive");
    if (!(psi_c > 0.0 && psi_c <= 90.0))
        throw std::domain_error("receiver FOV must lie in (0, 90]");
    if (!(r_pd > 0.0))
        throw std::domain_error("responsivity must be positive");
    if (!(bandwidth > 0.0))
        throw std::domain_error("bandwidth must be positive");
    if (k_total < 4 || k_total % 2 != 0)
        throw std::domain_error("subcarrier count must be even and >= 4");
    if (!(n0 > 0.0))
        throw std::domain_error("noise PSD must be positive");
    if (!(eta > 0.0))
        throw std::domain_error("conversion factor must be positive");
    if (!(p_opt > 0.0))
        throw std::domain_error("optical power must be positive");
}

ChannelConstants channel_constants(const PhyParams& p, double h)
{
    p.validate();
    if (!(h > 0.0))
        throw std::domain_error("vertical separation must be positive");

    ChannelConstants c;
    c.m = -1.0 / std::log2(cos_deg(p.phi_half));
    const double s = sin_deg(p.psi_c);
    c.g_f = p.varsigma * p.varsigma / (s * s);
    c.h0 = (c.m + 1.0) * p.a_pd * c.g_f * std::pow(h, c.m) / (2.0 * kPi);
    return c;
}

double los_gain(const ChannelConstants& c, const LinkGeometry& g,
                double theta_deg, double Omega_deg, double psi_c_deg)
{
    const double cpsi = cos_incidence(g, theta_deg, Omega_deg);
    if (cpsi < cos_deg(psi_c_deg) || cpsi < 0.0)
        return 0.0;
    return c.h0 * cpsi / std::pow(g.d, c.m + 2.0);
}

double los_gain_full(const PhyParams& p, const LinkGeometry& g,
                     double theta_deg, double Omega_deg)
{
    p.validate();
    const double m = -1.0 / std::log2(cos_deg(p.phi_half));
    const double s = sin_deg(p.psi_c);
    const double g_f = p.varsigma * p.varsigma / (s * s);

    const double cpsi = cos_incidence(g, theta_deg, Omega_deg);
    if (cpsi < cos_deg(p.psi_c) || cpsi < 0.0)
        return 0.0;
    const double cphi = cos_radiance(g);
    return (m + 1.0) * p.a_pd * g_f * std::pow(cphi, m) * cpsi
         / (2.0 * kPi * g.d * g.d);
}

} // namespace lifi
