// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifisim.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "lifi/montecarlo.hpp"
#include "lifi/scenario.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
lifi_status guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const lifi::ScenarioError& e) {
        set_error(e.what());
        return LIFI_ERR_PARSE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        // The degenerate gain model gets its own code so bindings can take
        // the point-mass path without string matching.
        if (std::strstr(e.what(), "point-mass") != nullptr)
            return LIFI_ERR_DEGENERATE;
        return LIFI_ERR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return LIFI_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return LIFI_ERR_INTERNAL;
    }
}

lifi::McConfig to_config(const lifi_mc_config* cfg)
{
    lifi::McConfig c;
    if (cfg != nullptr) {
        c.n_samples = cfg->n_samples;
        c.seed = cfg->seed;
        c.n_bins = cfg->n_bins;
        c.workers = cfg->workers;
    }
    return c;
}

lifi_critical_elevation to_c(const lifi::CriticalElevation& ce)
{
    lifi_critical_elevation out;
    switch (ce.kind) {
    case lifi::CriticalElevation::Kind::Angle:
        out.kind = LIFI_CE_ANGLE;
        break;
    case lifi::CriticalElevation::Kind::NeverBlocked:
        out.kind = LIFI_CE_NEVER_BLOCKED;
        break;
    case lifi::CriticalElevation::Kind::AlwaysBlocked:
        out.kind = LIFI_CE_ALWAYS_BLOCKED;
        break;
    }
    out.theta_ce_deg = ce.theta_ce_deg;
    return out;
}

lifi_omega_range to_c(const lifi::OmegaRange& r)
{
    lifi_omega_range out;
    switch (r.kind) {
    case lifi::OmegaRange::Kind::FullCircle:
        out.kind = LIFI_RANGE_FULL_CIRCLE;
        break;
    case lifi::OmegaRange::Kind::SingleArc:
        out.kind = LIFI_RANGE_SINGLE_ARC;
        break;
    case lifi::OmegaRange::Kind::WraparoundPair:
        out.kind = LIFI_RANGE_WRAPAROUND_PAIR;
        break;
    case lifi::OmegaRange::Kind::Empty:
        out.kind = LIFI_RANGE_EMPTY;
        break;
    }
    out.omega_r1 = r.omega_r1;
    out.omega_r2 = r.omega_r2;
    out.measure_deg = r.measure_deg;
    return out;
}

lifi_gain_distribution to_c(const lifi::GainDistribution& d)
{
    lifi_gain_distribution out;
    out.mu_h = d.mu_h;
    out.b_h = d.b_h;
    out.h_min = d.h_min;
    out.h_max = d.h_max;
    out.c_h = d.c_h;
    out.theta_ce = to_c(d.theta_ce);
    out.degenerate = d.degenerate ? 1 : 0;
    return out;
}

lifi::GainDistribution scenario_gain(const lifi::Scenario& s)
{
    if (s.orientation.omega_model
        != lifi::OrientationConfig::OmegaModel::Fixed)
        throw std::domain_error(
            "the analytic gain model needs a fixed facing direction");
    return lifi::gain_distribution(s.constants(), s.geometry(),
                                   s.orientation.omega, s.phy.psi_c,
                                   s.orientation.laplace());
}

} // namespace

struct lifi_scenario {
    lifi::Scenario s;
};

struct lifi_empirical {
    lifi::EmpiricalDistribution e;
};

extern "C" {

const char* lifi_last_error(void) { return g_last_error.c_str(); }

lifi_scenario* lifi_scenario_create_default(void)
{
    return new lifi_scenario{lifi::Scenario{}};
}

lifi_status lifi_scenario_load(const char* path, lifi_scenario** out)
{
    if (path == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new lifi_scenario{lifi::load_scenario(path)};
        return LIFI_OK;
    });
}

lifi_status lifi_scenario_parse(const char* text, lifi_scenario** out)
{
    if (text == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new lifi_scenario{lifi::parse_scenario(text)};
        return LIFI_OK;
    });
}

lifi_scenario* lifi_scenario_clone(const lifi_scenario* s)
{
    return s == nullptr ? nullptr : new lifi_scenario{*s};
}

void lifi_scenario_free(lifi_scenario* s) { delete s; }

lifi_status lifi_scenario_serialize(const lifi_scenario* s, int as_json,
                                    char** out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const std::string text = as_json
                                     ? lifi::serialize_scenario_json(s->s)
                                     : lifi::serialize_scenario(s->s);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        return LIFI_OK;
    });
}

void lifi_string_free(char* s) { delete[] s; }

lifi_status lifi_scenario_get_positions(const lifi_scenario* s, double ap[3],
                                        double ue[3])
{
    if (s == nullptr || ap == nullptr || ue == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    ap[0] = s->s.ap.x;
    ap[1] = s->s.ap.y;
    ap[2] = s->s.ap.z;
    ue[0] = s->s.ue.x;
    ue[1] = s->s.ue.y;
    ue[2] = s->s.ue.z;
    return LIFI_OK;
}

lifi_status lifi_scenario_set_ue_position(lifi_scenario* s, double x, double y,
                                          double z)
{
    if (s == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        lifi::Scenario next = s->s;
        next.ue = {x, y, z};
        next.validate();
        s->s = next;
        return LIFI_OK;
    });
}

lifi_status lifi_scenario_get_phy(const lifi_scenario* s, lifi_phy_params* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    const lifi::PhyParams& p = s->s.phy;
    *out = {p.a_pd, p.phi_half, p.varsigma, p.psi_c,      p.r_pd,
            p.bandwidth, p.k_total, p.n0,   p.eta, p.p_opt};
    return LIFI_OK;
}

lifi_status lifi_scenario_set_p_opt(lifi_scenario* s, double p_opt)
{
    if (s == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        lifi::Scenario next = s->s;
        next.phy.p_opt = p_opt;
        next.validate();
        s->s = next;
        return LIFI_OK;
    });
}

lifi_status lifi_scenario_set_psi_c(lifi_scenario* s, double psi_c)
{
    if (s == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        lifi::Scenario next = s->s;
        next.phy.psi_c = psi_c;
        next.validate();
        s->s = next;
        return LIFI_OK;
    });
}

lifi_status lifi_scenario_get_orientation(const lifi_scenario* s,
                                          lifi_orientation* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    const lifi::OrientationConfig& o = s->s.orientation;
    out->theta_model =
        o.theta_model == lifi::OrientationConfig::ThetaModel::Laplace
            ? LIFI_THETA_LAPLACE
            : LIFI_THETA_FIXED;
    out->theta = o.theta;
    out->mu_theta = o.mu_theta;
    out->sigma_theta = o.sigma_theta;
    out->omega_model =
        o.omega_model == lifi::OrientationConfig::OmegaModel::Uniform
            ? LIFI_OMEGA_UNIFORM
            : LIFI_OMEGA_FIXED;
    out->omega = o.omega;
    return LIFI_OK;
}

lifi_status lifi_scenario_set_orientation(lifi_scenario* s,
                                          const lifi_orientation* o)
{
    if (s == nullptr || o == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    if (o->theta_model != LIFI_THETA_FIXED
        && o->theta_model != LIFI_THETA_LAPLACE)
        return LIFI_ERR_INVALID_ARGUMENT;
    if (o->omega_model != LIFI_OMEGA_FIXED
        && o->omega_model != LIFI_OMEGA_UNIFORM)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        lifi::Scenario next = s->s;
        next.orientation.theta_model =
            o->theta_model == LIFI_THETA_LAPLACE
                ? lifi::OrientationConfig::ThetaModel::Laplace
                : lifi::OrientationConfig::ThetaModel::Fixed;
        next.orientation.theta = o->theta;
        next.orientation.mu_theta = o->mu_theta;
        next.orientation.sigma_theta = o->sigma_theta;
        next.orientation.omega_model =
            o->omega_model == LIFI_OMEGA_UNIFORM
                ? lifi::OrientationConfig::OmegaModel::Uniform
                : lifi::OrientationConfig::OmegaModel::Fixed;
        next.orientation.omega = o->omega;
        next.validate();
        s->s = next;
        return LIFI_OK;
    });
}

lifi_status lifi_scenario_get_sweep(const lifi_scenario* s, lifi_sweep* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    const lifi::SweepConfig& sw = s->s.sweep;
    out->active = sw.active ? 1 : 0;
    std::snprintf(out->variable, sizeof(out->variable), "%s",
                  sw.variable.c_str());
    out->start = sw.start;
    out->stop = sw.stop;
    out->step = sw.step;
    return LIFI_OK;
}

lifi_status lifi_link_geometry_of(const lifi_scenario* s,
                                  lifi_link_geometry* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::LinkGeometry g = s->s.geometry();
        *out = {g.r, g.h, g.d, g.bearing_deg};
        return LIFI_OK;
    });
}

lifi_status lifi_channel_constants_of(const lifi_scenario* s,
                                      lifi_channel_constants* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::ChannelConstants c = s->s.constants();
        *out = {c.m, c.g_f, c.h0};
        return LIFI_OK;
    });
}

lifi_status lifi_lambda_coefficients(const lifi_scenario* s, double omega_deg,
                                     double* lambda1, double* lambda2)
{
    if (s == nullptr || lambda1 == nullptr || lambda2 == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::LambdaCoefficients lc =
            lifi::lambda_coefficients(s->s.geometry(), omega_deg);
        *lambda1 = lc.lambda1;
        *lambda2 = lc.lambda2;
        return LIFI_OK;
    });
}

lifi_status lifi_cos_incidence(const lifi_scenario* s, double theta_deg,
                               double omega_deg, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::cos_incidence(s->s.geometry(), theta_deg, omega_deg);
        return LIFI_OK;
    });
}

lifi_status lifi_los_gain(const lifi_scenario* s, double theta_deg,
                          double omega_deg, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::los_gain(s->s.constants(), s->s.geometry(), theta_deg,
                              omega_deg, s->s.phy.psi_c);
        return LIFI_OK;
    });
}

lifi_status lifi_critical_elevation_of(const lifi_scenario* s,
                                       double omega_deg,
                                       lifi_critical_elevation* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(lifi::critical_elevation(s->s.geometry(), omega_deg,
                                             s->s.phy.psi_c));
        return LIFI_OK;
    });
}

lifi_status lifi_theta_threshold(const lifi_scenario* s, double* theta_th_deg,
                                 double* omega_th_deg, int* in_range)
{
    if (s == nullptr || theta_th_deg == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::ThetaThreshold t =
            lifi::theta_threshold(s->s.geometry(), s->s.phy.psi_c);
        *theta_th_deg = t.theta_th_deg;
        if (omega_th_deg != nullptr)
            *omega_th_deg = t.omega_th_deg;
        if (in_range != nullptr)
            *in_range = t.in_range ? 1 : 0;
        return LIFI_OK;
    });
}

lifi_status lifi_omega_range_of(const lifi_scenario* s, double theta_deg,
                                lifi_omega_range* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(lifi::omega_range(s->s.geometry(), theta_deg,
                                      s->s.phy.psi_c));
        return LIFI_OK;
    });
}

lifi_status lifi_omega_range_all_theta_of(const lifi_scenario* s,
                                          lifi_omega_range* out,
                                          int* applicable)
{
    if (s == nullptr || out == nullptr || applicable == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::OmegaRangeAllTheta r =
            lifi::omega_range_all_theta(s->s.geometry(), s->s.phy.psi_c);
        *applicable = r.applicable ? 1 : 0;
        if (r.applicable)
            *out = to_c(r.range);
        return LIFI_OK;
    });
}

lifi_status lifi_prob_los_blocked(const lifi_scenario* s, double theta_deg,
                                  double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::prob_los_blocked(s->s.geometry(), theta_deg,
                                      s->s.phy.psi_c);
        return LIFI_OK;
    });
}

lifi_status lifi_trunc_laplace_pdf(double mu, double sigma, double theta,
                                   double* out)
{
    if (out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::TruncatedLaplace(mu, sigma).pdf(theta);
        return LIFI_OK;
    });
}

lifi_status lifi_trunc_laplace_cdf(double mu, double sigma, double theta,
                                   double* out)
{
    if (out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::TruncatedLaplace(mu, sigma).cdf(theta);
        return LIFI_OK;
    });
}

lifi_status lifi_trunc_laplace_quantile(double mu, double sigma, double u,
                                        double* out)
{
    if (out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::TruncatedLaplace(mu, sigma).quantile(u);
        return LIFI_OK;
    });
}

lifi_status lifi_gain_distribution_of(const lifi_scenario* s,
                                      lifi_gain_distribution* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(scenario_gain(s->s));
        return LIFI_OK;
    });
}

lifi_status lifi_gain_pdf(const lifi_scenario* s, double hbar, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = scenario_gain(s->s).pdf(hbar);
        return LIFI_OK;
    });
}

lifi_status lifi_gain_cdf(const lifi_scenario* s, double hbar, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = scenario_gain(s->s).cdf(hbar);
        return LIFI_OK;
    });
}

lifi_status lifi_snr_model_of(const lifi_scenario* s, lifi_snr_model* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::SnrModel m =
            lifi::snr_model(s->s.phy, scenario_gain(s->s));
        out->s0 = m.s0;
        out->s_min = m.s_min;
        out->s_max = m.s_max;
        out->gain = to_c(m.gain);
        return LIFI_OK;
    });
}

lifi_status lifi_snr_pdf(const lifi_scenario* s, double snr, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::snr_pdf(lifi::snr_model(s->s.phy, scenario_gain(s->s)),
                             snr);
        return LIFI_OK;
    });
}

lifi_status lifi_snr_cdf(const lifi_scenario* s, double snr, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::snr_cdf(lifi::snr_model(s->s.phy, scenario_gain(s->s)),
                             snr);
        return LIFI_OK;
    });
}

lifi_status lifi_ber_awgn(double snr, int mqam, double* out)
{
    if (out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::ber_awgn(snr, lifi::make_modulation(mqam));
        return LIFI_OK;
    });
}

lifi_status lifi_ber_exact(const lifi_scenario* s, int mqam, double* out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = lifi::ber_exact(lifi::snr_model(s->s.phy, scenario_gain(s->s)),
                               lifi::make_modulation(mqam));
        return LIFI_OK;
    });
}

lifi_status lifi_ber_approx(const lifi_scenario* s, int mqam, double* out,
                            int* clamped)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::BerApprox a = lifi::ber_approx(
            lifi::snr_model(s->s.phy, scenario_gain(s->s)),
            lifi::make_modulation(mqam));
        *out = a.value;
        if (clamped != nullptr)
            *clamped = a.clamped ? 1 : 0;
        return LIFI_OK;
    });
}

lifi_status lifi_optimum_tilt(const lifi_scenario* s, double omega_deg,
                              double* theta_ot_deg, int* clamped)
{
    if (s == nullptr || theta_ot_deg == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::OptimumTilt t =
            lifi::optimum_tilt(s->s.geometry(), omega_deg);
        *theta_ot_deg = t.theta_ot_deg;
        if (clamped != nullptr)
            *clamped = t.clamped ? 1 : 0;
        return LIFI_OK;
    });
}

lifi_status lifi_simulate_gain(const lifi_scenario* s,
                               const lifi_mc_config* cfg, lifi_empirical** out)
{
    if (s == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new lifi_empirical{lifi::simulate_gain(s->s, to_config(cfg))};
        return LIFI_OK;
    });
}

void lifi_empirical_free(lifi_empirical* e) { delete e; }

uint64_t lifi_empirical_n(const lifi_empirical* e)
{
    return e == nullptr ? 0 : e->e.n();
}

double lifi_empirical_point_mass_at_zero(const lifi_empirical* e)
{
    return e == nullptr ? 0.0 : e->e.point_mass_at_zero();
}

double lifi_empirical_ecdf(const lifi_empirical* e, double x)
{
    return e == nullptr ? 0.0 : e->e.ecdf(x);
}

int lifi_empirical_bin_count(const lifi_empirical* e)
{
    return e == nullptr ? 0 : static_cast<int>(e->e.bin_counts().size());
}

lifi_status lifi_empirical_bin(const lifi_empirical* e, int index,
                               double* edge_lo, double* edge_hi,
                               uint64_t* count)
{
    if (e == nullptr || edge_lo == nullptr || edge_hi == nullptr
        || count == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    if (index < 0 || index >= static_cast<int>(e->e.bin_counts().size()))
        return LIFI_ERR_INVALID_ARGUMENT;
    *edge_lo = e->e.bin_edges()[index];
    *edge_hi = e->e.bin_edges()[index + 1];
    *count = e->e.bin_counts()[index];
    return LIFI_OK;
}

lifi_status lifi_simulate_ber(const lifi_scenario* s, int mqam,
                              const lifi_mc_config* cfg, double* ber,
                              double* std_error)
{
    if (s == nullptr || ber == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::BerEstimate est = lifi::simulate_ber(
            s->s, lifi::make_modulation(mqam), to_config(cfg));
        *ber = est.value;
        if (std_error != nullptr)
            *std_error = est.std_error;
        return LIFI_OK;
    });
}

lifi_status lifi_simulate_ber_orientation(const lifi_scenario* s, int mqam,
                                          const lifi_mc_config* cfg,
                                          double* ber, double* std_error)
{
    if (s == nullptr || ber == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::BerEstimate est = lifi::simulate_ber_orientation(
            s->s, lifi::make_modulation(mqam), to_config(cfg));
        *ber = est.value;
        if (std_error != nullptr)
            *std_error = est.std_error;
        return LIFI_OK;
    });
}

lifi_status lifi_ks_gain_model(const lifi_scenario* s, const lifi_empirical* e,
                               double* out)
{
    if (s == nullptr || e == nullptr || out == nullptr)
        return LIFI_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const lifi::GainDistribution dist = scenario_gain(s->s);
        *out = lifi::ks_statistic(e->e, lifi::conditioned_gain_cdf(dist));
        return LIFI_OK;
    });
}

} // extern "C"
