// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/linkstats.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lifi/quadrature.hpp"

namespace lifi {

namespace {

double exp_or_limit(double x, double b)
{
    // exp(x/b) with the b -> 0 limit (x <= 0 in every call site).
    if (b > 0.0)
        return std::exp(x / b);
    return x < 0.0 ? 0.0 : 1.0;
}

void require_not_degenerate(const GainDistribution& d)
{
    if (d.degenerate)
        throw std::domain_error(
            "gain scale collapsed to zero: use the point-mass path "
            "(all continuous mass sits at mu_h)");
}

// Segment boundaries fanning out geometrically from the density peak, so the
// adaptive rule cannot overlook a spike much narrower than the support.
std::vector<double> peak_aware_breakpoints(double lo, double hi, double mu,
                                           double b)
{
    std::vector<double> pts{lo, hi};
    if (mu > lo && mu < hi)
        pts.push_back(mu);
    for (double w = b; w < (hi - lo); w *= 10.0) {
        const double up = mu + w;
        const double dn = mu - w;
        if (up > lo && up < hi)
            pts.push_back(up);
        if (dn > lo && dn < hi)
            pts.push_back(dn);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

double GainDistribution::norm_factor() const
{
    return 2.0 - exp_or_limit(-(h_max - mu_h), b_h);
}

double GainDistribution::continuous_mass() const
{
    if (degenerate)
        return 1.0 - c_h;
    if (h_min >= h_max)
        return 0.0; // blocked support: everything sits in the atom
    const double d = norm_factor();
    if (mu_h >= h_min) {
        return (2.0 - exp_or_limit(h_min - mu_h, b_h)
                - exp_or_limit(-(h_max - mu_h), b_h))
             / d;
    }
    return (exp_or_limit(-(h_min - mu_h), b_h)
            - exp_or_limit(-(h_max - mu_h), b_h))
         / d;
}

double GainDistribution::pdf(double hbar) const
{
    require_not_degenerate(*this);
    if (h_min >= h_max || hbar < h_min || hbar > h_max)
        return 0.0;
    return std::exp(-std::abs(hbar - mu_h) / b_h) / (b_h * norm_factor());
}

double GainDistribution::cdf(double hbar) const
{
    require_not_degenerate(*this);
    if (hbar < 0.0)
        return 0.0;
    if (h_min >= h_max || hbar < h_min)
        return c_h;
    const double x = std::min(hbar, h_max);
    const double d = norm_factor();

    double cont;
    if (mu_h >= h_min) {
        if (x <= mu_h)
            cont = (std::exp((x - mu_h) / b_h)
                    - std::exp((h_min - mu_h) / b_h))
                 / d;
        else
            cont = (2.0 - std::exp((h_min - mu_h) / b_h)
                    - std::exp(-(x - mu_h) / b_h))
                 / d;
    } else {
        cont = (std::exp(-(h_min - mu_h) / b_h)
                - std::exp(-(x - mu_h) / b_h))
             / d;
    }
    return c_h + cont;
}

double GainDistribution::quantile_continuous(double v) const
{
    require_not_degenerate(*this);
    const double mc = continuous_mass();
    if (!(v >= 0.0 && v <= mc * (1.0 + 1e-12)))
        throw std::domain_error("continuous mass argument out of range");
    v = std::min(v, mc);
    const double d = norm_factor();

    double h;
    if (mu_h >= h_min) {
        const double e_low = std::exp((h_min - mu_h) / b_h);
        const double below_mu = (1.0 - e_low) / d;
        if (v <= below_mu) {
            h = mu_h + b_h * std::log(v * d + e_low);
        } else {
            const double w = v * d - (1.0 - e_low);
            h = mu_h - b_h * std::log(1.0 - w);
        }
    } else {
        const double e_low = std::exp(-(h_min - mu_h) / b_h);
        h = mu_h - b_h * std::log(e_low - v * d);
    }
    return std::min(std::max(h, h_min), h_max);
}

GainDistribution gain_distribution(const ChannelConstants& c,
                                   const LinkGeometry& g, double Omega_deg,
                                   double psi_c_deg,
                                   const TruncatedLaplace& d_theta)
{
    const LambdaCoefficients lc = lambda_coefficients(g, Omega_deg);
    const double scale = c.h0 / std::pow(g.d, c.m + 2.0);
    const double mu_t = d_theta.mu();
    const double sin_mu = sin_deg(mu_t);
    const double cos_mu = cos_deg(mu_t);

    GainDistribution dist;
    dist.mu_h = scale * (lc.lambda1 * sin_mu + lc.lambda2 * cos_mu);
    // The scale arises from a first-order expansion of the incidence cosine
    // in the tilt, so the elevation scale enters in radians here.
    dist.b_h = scale * deg_to_rad(d_theta.b())
             * std::abs(lc.lambda1 * cos_mu - lc.lambda2 * sin_mu);

    const double cpsi_c = cos_deg(psi_c_deg);
    const double min_lambda = std::min(lc.lambda1, lc.lambda2);
    dist.h_min =
        min_lambda < cpsi_c ? scale * cpsi_c : scale * min_lambda;
    dist.h_max = lc.lambda1 < 0.0 ? scale * lc.lambda2
                                  : scale * std::hypot(lc.lambda1, lc.lambda2);

    dist.theta_ce = critical_elevation(g, Omega_deg, psi_c_deg);
    switch (dist.theta_ce.kind) {
    case CriticalElevation::Kind::NeverBlocked:
        dist.c_h = 0.0;
        break;
    case CriticalElevation::Kind::AlwaysBlocked:
        dist.c_h = 1.0;
        break;
    case CriticalElevation::Kind::Angle: {
        const double z = dist.theta_ce.theta_ce_deg - mu_t;
        const double b_t = d_theta.b();
        dist.c_h = z < 0.0 ? 1.0 - 0.5 * std::exp(z / b_t)
                           : 0.5 * std::exp(-z / b_t);
        break;
    }
    }

    dist.degenerate =
        !(dist.b_h > 1e-12 * std::max(dist.h_max, std::abs(dist.mu_h)));
    return dist;
}

SnrModel snr_model(const PhyParams& p, const GainDistribution& dist)
{
    p.validate();
    if (p.k_total <= 2)
        throw std::domain_error("subcarrier count must exceed 2");

    const double sigma_k2 = p.n0 * p.bandwidth / p.k_total;

    SnrModel m;
    m.s0 = (p.r_pd * p.r_pd * p.p_opt * p.p_opt)
         / ((p.k_total - 2) * p.eta * p.eta * sigma_k2);
    m.s_min = m.s0 * dist.h_min * dist.h_min;
    m.s_max = m.s0 * dist.h_max * dist.h_max;
    m.gain = dist;
    return m;
}

double snr_pdf(const SnrModel& m, double s)
{
    require_not_degenerate(m.gain);
    if (s < m.s_min || s > m.s_max)
        return 0.0;
    if (s == 0.0)
        return m.s_min == 0.0
                   ? std::numeric_limits<double>::infinity()
                   : 0.0;
    const double rs0 = std::sqrt(m.s0);
    const double num =
        std::exp(-std::abs(std::sqrt(s) - rs0 * m.gain.mu_h)
                 / (rs0 * m.gain.b_h));
    return num / (2.0 * m.gain.b_h * std::sqrt(m.s0 * s)
                  * m.gain.norm_factor());
}

double snr_cdf(const SnrModel& m, double s)
{
    if (s < 0.0)
        return 0.0;
    return m.gain.cdf(std::sqrt(s / m.s0));
}

ModulationOrder make_modulation(int m)
{
    int v = 4;
    while (v < m && v <= (1 << 28))
        v *= 4;
    if (v != m)
        throw std::domain_error(
            "constellation size must be a power of 4 (square QAM)");

    ModulationOrder mod;
    mod.m = m;
    mod.c_m = 4.0 / std::log2(static_cast<double>(m))
            * (1.0 - 1.0 / std::sqrt(static_cast<double>(m)));
    return mod;
}

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double ber_awgn(double s, const ModulationOrder& mod)
{
    if (!(s >= 0.0))
        throw std::domain_error("SNR must be non-negative");
    return mod.c_m * q_function(std::sqrt(3.0 * s / (mod.m - 1)));
}

double ber_exact(const SnrModel& m, const ModulationOrder& mod)
{
    const GainDistribution& d = m.gain;
    const double atom = 0.5 * d.c_h * mod.c_m;

    if (d.degenerate)
        return ber_awgn(m.s0 * d.mu_h * d.mu_h, mod) * (1.0 - d.c_h) + atom;
    if (d.h_min >= d.h_max)
        return atom;

    const auto integrand = [&](double h) {
        return ber_awgn(m.s0 * h * h, mod) * d.pdf(h);
    };

    const std::vector<double> pts =
        peak_aware_breakpoints(d.h_min, d.h_max, d.mu_h, d.b_h);
    const double tol = 1e-10 / static_cast<double>(pts.size() - 1);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate_adaptive(integrand, pts[i], pts[i + 1], tol).value;
    return total + atom;
}

BerApprox ber_approx(const SnrModel& m, const ModulationOrder& mod)
{
    const GainDistribution& d = m.gain;
    const double atom = 0.5 * d.c_h * mod.c_m;

    BerApprox out;
    if (d.mu_h <= d.h_min) {
        const double delta0 = 0.5 * mod.c_m
                            * exp_or_limit(d.mu_h - d.h_min, d.b_h)
                            / (2.0 - exp_or_limit(-(d.h_max - d.mu_h), d.b_h));
        out.value = -delta0 + atom;
    } else {
        out.value = ber_awgn(m.s0 * d.mu_h * d.mu_h, mod) + atom;
    }

    const double cap = 0.5 * mod.c_m;
    if (out.value < 0.0) {
        out.value = 0.0;
        out.clamped = true;
    } else if (out.value > cap) {
        out.value = cap;
        out.clamped = true;
    }
    return out;
}

OptimumTilt optimum_tilt(const LinkGeometry& g, double Omega_deg)
{
    const LambdaCoefficients lc = lambda_coefficients(g, Omega_deg);
    if (lc.lambda1 < 0.0)
        return {0.0, true};
    return {rad_to_deg(std::atan(lc.lambda1 / lc.lambda2)), false};
}

} // namespace lifi
