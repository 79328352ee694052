/* SPDX-License-Identifier: Apache-2.0
 *
 * lifisim: link-level LiFi downlink simulation with randomly oriented
 * receivers. C API of the shared library: opaque handles plus status codes.
 * Copyright (C) 2026 lifisim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef LIFISIM_H
#define LIFISIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lifi_status {
    LIFI_OK = 0,
    LIFI_ERR_INVALID_ARGUMENT = 1, /* null handle / out pointer, bad enum */
    LIFI_ERR_DOMAIN = 2,           /* value outside the documented domain */
    LIFI_ERR_PARSE = 3,            /* malformed scenario file */
    LIFI_ERR_DEGENERATE = 4,       /* gain scale collapsed: point-mass path */
    LIFI_ERR_INTERNAL = 5
} lifi_status;

/* Message for the most recent failure on this thread. */
const char* lifi_last_error(void);

/* ------------------------------------------------------------------ */
/* Scenario handle                                                     */
/* ------------------------------------------------------------------ */

typedef struct lifi_scenario lifi_scenario;

lifi_scenario* lifi_scenario_create_default(void);
lifi_status lifi_scenario_load(const char* path, lifi_scenario** out);
lifi_status lifi_scenario_parse(const char* text, lifi_scenario** out);
lifi_scenario* lifi_scenario_clone(const lifi_scenario* s);
void lifi_scenario_free(lifi_scenario* s);

/* Serialized scenario; free the returned buffer with lifi_string_free. */
lifi_status lifi_scenario_serialize(const lifi_scenario* s, int as_json,
                                    char** out);
void lifi_string_free(char* s);

typedef struct lifi_phy_params {
    double a_pd;
    double phi_half;
    double varsigma;
    double psi_c;
    double r_pd;
    double bandwidth;
    int subcarriers;
    double n0;
    double eta;
    double p_opt;
} lifi_phy_params;

typedef enum lifi_theta_model {
    LIFI_THETA_FIXED = 0,
    LIFI_THETA_LAPLACE = 1
} lifi_theta_model;

typedef enum lifi_omega_model {
    LIFI_OMEGA_FIXED = 0,
    LIFI_OMEGA_UNIFORM = 1
} lifi_omega_model;

typedef struct lifi_orientation {
    int theta_model; /* lifi_theta_model */
    double theta;
    double mu_theta;
    double sigma_theta;
    int omega_model; /* lifi_omega_model */
    double omega;
} lifi_orientation;

typedef struct lifi_sweep {
    int active;
    char variable[16]; /* "theta", "omega", "r", "p_opt" */
    double start;
    double stop;
    double step;
} lifi_sweep;

lifi_status lifi_scenario_get_positions(const lifi_scenario* s, double ap[3],
                                        double ue[3]);
lifi_status lifi_scenario_set_ue_position(lifi_scenario* s, double x,
                                          double y, double z);
lifi_status lifi_scenario_get_phy(const lifi_scenario* s, lifi_phy_params* out);
lifi_status lifi_scenario_set_p_opt(lifi_scenario* s, double p_opt);
lifi_status lifi_scenario_set_psi_c(lifi_scenario* s, double psi_c);
lifi_status lifi_scenario_get_orientation(const lifi_scenario* s,
                                          lifi_orientation* out);
lifi_status lifi_scenario_set_orientation(lifi_scenario* s,
                                          const lifi_orientation* o);
lifi_status lifi_scenario_get_sweep(const lifi_scenario* s, lifi_sweep* out);

/* ------------------------------------------------------------------ */
/* Geometry and channel                                                */
/* ------------------------------------------------------------------ */

typedef struct lifi_link_geometry {
    double r;
    double h;
    double d;
    double bearing_deg;
} lifi_link_geometry;

typedef struct lifi_channel_constants {
    double m;
    double g_f;
    double h0;
} lifi_channel_constants;

lifi_status lifi_link_geometry_of(const lifi_scenario* s,
                                  lifi_link_geometry* out);
lifi_status lifi_channel_constants_of(const lifi_scenario* s,
                                      lifi_channel_constants* out);
lifi_status lifi_lambda_coefficients(const lifi_scenario* s, double omega_deg,
                                     double* lambda1, double* lambda2);
lifi_status lifi_cos_incidence(const lifi_scenario* s, double theta_deg,
                               double omega_deg, double* out);

/* LOS gain at an explicit tilt/facing pair, using the scenario's PHY. */
lifi_status lifi_los_gain(const lifi_scenario* s, double theta_deg,
                          double omega_deg, double* out);

/* ------------------------------------------------------------------ */
/* Orientation admissibility                                           */
/* ------------------------------------------------------------------ */

typedef enum lifi_ce_kind {
    LIFI_CE_ANGLE = 0,
    LIFI_CE_NEVER_BLOCKED = 1,
    LIFI_CE_ALWAYS_BLOCKED = 2
} lifi_ce_kind;

typedef struct lifi_critical_elevation {
    int kind; /* lifi_ce_kind */
    double theta_ce_deg;
} lifi_critical_elevation;

typedef enum lifi_range_kind {
    LIFI_RANGE_FULL_CIRCLE = 0,
    LIFI_RANGE_SINGLE_ARC = 1,
    LIFI_RANGE_WRAPAROUND_PAIR = 2,
    LIFI_RANGE_EMPTY = 3
} lifi_range_kind;

typedef struct lifi_omega_range {
    int kind; /* lifi_range_kind */
    double omega_r1;
    double omega_r2;
    double measure_deg;
} lifi_omega_range;

lifi_status lifi_critical_elevation_of(const lifi_scenario* s,
                                       double omega_deg,
                                       lifi_critical_elevation* out);
lifi_status lifi_theta_threshold(const lifi_scenario* s, double* theta_th_deg,
                                 double* omega_th_deg, int* in_range);
lifi_status lifi_omega_range_of(const lifi_scenario* s, double theta_deg,
                                lifi_omega_range* out);
lifi_status lifi_omega_range_all_theta_of(const lifi_scenario* s,
                                          lifi_omega_range* out,
                                          int* applicable);
lifi_status lifi_prob_los_blocked(const lifi_scenario* s, double theta_deg,
                                  double* out);

/* Truncated-Laplace elevation model on [0, 90] degrees. */
lifi_status lifi_trunc_laplace_pdf(double mu, double sigma, double theta,
                                   double* out);
lifi_status lifi_trunc_laplace_cdf(double mu, double sigma, double theta,
                                   double* out);
lifi_status lifi_trunc_laplace_quantile(double mu, double sigma, double u,
                                        double* out);

/* ------------------------------------------------------------------ */
/* Gain / SNR statistics and BER                                       */
/* ------------------------------------------------------------------ */

typedef struct lifi_gain_distribution {
    double mu_h;
    double b_h;
    double h_min;
    double h_max;
    double c_h;
    lifi_critical_elevation theta_ce;
    int degenerate;
} lifi_gain_distribution;

typedef struct lifi_snr_model {
    double s0;
    double s_min;
    double s_max;
    lifi_gain_distribution gain;
} lifi_snr_model;

lifi_status lifi_gain_distribution_of(const lifi_scenario* s,
                                      lifi_gain_distribution* out);
lifi_status lifi_gain_pdf(const lifi_scenario* s, double hbar, double* out);
lifi_status lifi_gain_cdf(const lifi_scenario* s, double hbar, double* out);
lifi_status lifi_snr_model_of(const lifi_scenario* s, lifi_snr_model* out);
lifi_status lifi_snr_pdf(const lifi_scenario* s, double snr, double* out);
lifi_status lifi_snr_cdf(const lifi_scenario* s, double snr, double* out);

lifi_status lifi_ber_awgn(double snr, int mqam, double* out);
lifi_status lifi_ber_exact(const lifi_scenario* s, int mqam, double* out);
lifi_status lifi_ber_approx(const lifi_scenario* s, int mqam, double* out,
                            int* clamped);
lifi_status lifi_optimum_tilt(const lifi_scenario* s, double omega_deg,
                              double* theta_ot_deg, int* clamped);

/* ------------------------------------------------------------------ */
/* Monte-Carlo engine                                                  */
/* ------------------------------------------------------------------ */

typedef struct lifi_mc_config {
    uint64_t n_samples;
    uint64_t seed;
    int n_bins;
    int workers;
} lifi_mc_config;

typedef struct lifi_empirical lifi_empirical;

lifi_status lifi_simulate_gain(const lifi_scenario* s,
                               const lifi_mc_config* cfg,
                               lifi_empirical** out);
void lifi_empirical_free(lifi_empirical* e);

uint64_t lifi_empirical_n(const lifi_empirical* e);
double lifi_empirical_point_mass_at_zero(const lifi_empirical* e);
double lifi_empirical_ecdf(const lifi_empirical* e, double x);
int lifi_empirical_bin_count(const lifi_empirical* e);
lifi_status lifi_empirical_bin(const lifi_empirical* e, int index,
                               double* edge_lo, double* edge_hi,
                               uint64_t* count);

/* Sampling route to the average-BER integral of the analytic model. */
lifi_status lifi_simulate_ber(const lifi_scenario* s, int mqam,
                              const lifi_mc_config* cfg, double* ber,
                              double* std_error);

/* Average BER over physically sampled orientations. */
lifi_status lifi_simulate_ber_orientation(const lifi_scenario* s, int mqam,
                                          const lifi_mc_config* cfg,
                                          double* ber, double* std_error);

/* KS distance between the positive part of an empirical gain distribution
 * and the scenario's analytic gain model, both conditioned on gain > 0. */
lifi_status lifi_ks_gain_model(const lifi_scenario* s,
                               const lifi_empirical* e, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LIFISIM_H */
