// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line front end. Everything below goes through the C API of the
// shared library; scenario files drive the computations and the results come
// out as CSV series or JSON reports.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lifisim.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct ScenarioDeleter {
    void operator()(lifi_scenario* s) const { lifi_scenario_free(s); }
};
using ScenarioPtr = std::unique_ptr<lifi_scenario, ScenarioDeleter>;

struct EmpiricalDeleter {
    void operator()(lifi_empirical* e) const { lifi_empirical_free(e); }
};
using EmpiricalPtr = std::unique_ptr<lifi_empirical, EmpiricalDeleter>;

struct CliError {
    int code;
    std::string message;
};

void require_ok(lifi_status st, const std::string& what)
{
    if (st != LIFI_OK)
        throw CliError{kExitConfig, what + ": " + lifi_last_error()};
}

ScenarioPtr load_or_default(const std::string& config_path)
{
    if (config_path.empty())
        return ScenarioPtr(lifi_scenario_create_default());
    lifi_scenario* raw = nullptr;
    require_ok(lifi_scenario_load(config_path.c_str(), &raw),
               "loading '" + config_path + "'");
    return ScenarioPtr(raw);
}

ScenarioPtr clone(const ScenarioPtr& s)
{
    return ScenarioPtr(lifi_scenario_clone(s.get()));
}

std::string fmt9(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

/// All table output funnels through here: header first, then 9-significant-
/// digit rows, byte-stable for fixed inputs.
class TableWriter {
public:
    TableWriter(const std::string& out_path, const std::string& format,
                std::vector<std::string> columns)
        : format_(format), columns_(std::move(columns))
    {
        if (out_path.empty() || out_path == "-") {
            stream_ = &std::cout;
        } else {
            file_.open(out_path, std::ios::binary);
            if (!file_)
                throw CliError{kExitConfig,
                               "cannot open output file: " + out_path};
            stream_ = &file_;
        }
        if (format_ == "csv") {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                *stream_ << (i ? "," : "") << columns_[i];
            *stream_ << "\n";
        } else {
            *stream_ << "[";
        }
    }

    void row(const std::vector<std::string>& cells)
    {
        if (format_ == "csv") {
            for (std::size_t i = 0; i < cells.size(); ++i)
                *stream_ << (i ? "," : "") << cells[i];
            *stream_ << "\n";
        } else {
            nlohmann::json obj;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                double num;
                try {
                    std::size_t pos = 0;
                    num = std::stod(cells[i], &pos);
                    if (pos == cells[i].size()) {
                        obj[columns_[i]] = num;
                        continue;
                    }
                } catch (const std::exception&) {
                }
                obj[columns_[i]] = cells[i];
            }
            *stream_ << (first_ ? "\n  " : ",\n  ") << obj.dump();
            first_ = false;
        }
    }

    ~TableWriter()
    {
        if (format_ != "csv")
            *stream_ << "\n]\n";
        stream_->flush();
    }

private:
    std::string format_;
    std::vector<std::string> columns_;
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
    bool first_ = true;
};

void emit_json(const nlohmann::json& j, const std::string& out_path)
{
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw CliError{kExitConfig, "cannot open output file: " + out_path};
        f << j.dump(2) << "\n";
    }
}

std::vector<double> sweep_grid(double start, double stop, double step)
{
    std::vector<double> grid;
    const long long count =
        static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long k = 0; k <= count; ++k)
        grid.push_back(start + k * step);
    return grid;
}

double default_theta(const ScenarioPtr& s)
{
    lifi_orientation o;
    require_ok(lifi_scenario_get_orientation(s.get(), &o), "orientation");
    return o.theta_model == LIFI_THETA_FIXED ? o.theta : o.mu_theta;
}

double fixed_omega(const ScenarioPtr& s, const std::string& what)
{
    lifi_orientation o;
    require_ok(lifi_scenario_get_orientation(s.get(), &o), "orientation");
    if (o.omega_model != LIFI_OMEGA_FIXED)
        throw CliError{kExitConfig,
                       what + " needs a fixed facing direction (orientation."
                              "omega must be a number)"};
    return o.omega;
}

lifi_sweep sweep_or(const ScenarioPtr& s, const char* fallback_var,
                    double start, double stop, double step)
{
    lifi_sweep sw;
    require_ok(lifi_scenario_get_sweep(s.get(), &sw), "sweep");
    if (!sw.active) {
        sw.active = 1;
        std::snprintf(sw.variable, sizeof(sw.variable), "%s", fallback_var);
        sw.start = start;
        sw.stop = stop;
        sw.step = step;
    }
    return sw;
}

// ---------------------------------------------------------------- commands

int cmd_gain_sweep(const ScenarioPtr& scenario, const std::string& out,
                   const std::string& format)
{
    const lifi_sweep sw = sweep_or(scenario, "theta", 0.0, 90.0, 0.1);
    const bool over_theta = std::strcmp(sw.variable, "theta") == 0;
    if (!over_theta && std::strcmp(sw.variable, "omega") != 0)
        throw CliError{kExitConfig,
                       "gain-sweep sweeps theta or omega, not '"
                           + std::string(sw.variable) + "'"};

    const double omega = fixed_omega(scenario, "gain-sweep");
    const double theta = default_theta(scenario);

    TableWriter table(out, format, {over_theta ? "theta_deg" : "omega_deg", "gain"});
    for (double x : sweep_grid(sw.start, sw.stop, sw.step)) {
        double gain = 0.0;
        const double th = over_theta ? x : theta;
        const double om = over_theta ? omega : x;
        require_ok(lifi_los_gain(scenario.get(), th, om, &gain), "gain");
        table.row({fmt9(x), fmt9(gain)});
    }
    return 0;
}

int cmd_omega_range(const ScenarioPtr& scenario, double theta,
                    const std::string& out)
{
    lifi_omega_range r;
    require_ok(lifi_omega_range_of(scenario.get(), theta, &r), "omega-range");
    double pr = 0.0;
    require_ok(lifi_prob_los_blocked(scenario.get(), theta, &pr),
               "blockage probability");

    nlohmann::json j;
    switch (r.kind) {
    case LIFI_RANGE_FULL_CIRCLE:
        j["kind"] = "full-circle";
        break;
    case LIFI_RANGE_SINGLE_ARC:
        j["kind"] = "single-arc";
        break;
    case LIFI_RANGE_WRAPAROUND_PAIR:
        j["kind"] = "wraparound-pair";
        break;
    default:
        j["kind"] = "empty";
        break;
    }
    if (r.kind == LIFI_RANGE_SINGLE_ARC
        || r.kind == LIFI_RANGE_WRAPAROUND_PAIR) {
        j["omega_r1"] = r.omega_r1;
        j["omega_r2"] = r.omega_r2;
    }
    j["measure_deg"] = r.measure_deg;
    j["pr_blocked"] = pr;
    j["theta_deg"] = theta;
    emit_json(j, out);
    return 0;
}

int cmd_outage_profile(const ScenarioPtr& scenario, double theta,
                       std::vector<double> psi_c_list, const std::string& out,
                       const std::string& format)
{
    if (psi_c_list.empty())
        psi_c_list = {30.0, 40.0, 60.0, 80.0, 90.0};

    const lifi_sweep sw = sweep_or(scenario, "r", 0.0, 6.0, 0.05);
    if (std::strcmp(sw.variable, "r") != 0)
        throw CliError{kExitConfig, "outage-profile expects an r sweep"};

    double ap[3], ue[3];
    require_ok(lifi_scenario_get_positions(scenario.get(), ap, ue),
               "positions");
    lifi_link_geometry g;
    require_ok(lifi_link_geometry_of(scenario.get(), &g), "geometry");
    const double bearing = g.r > 0.0 ? g.bearing_deg * (M_PI / 180.0) : 0.0;

    TableWriter table(out, format, {"r", "psi_c_deg", "pr_blocked"});
    for (double psi_c : psi_c_list) {
        ScenarioPtr point = clone(scenario);
        require_ok(lifi_scenario_set_psi_c(point.get(), psi_c), "psi_c");
        for (double r : sweep_grid(sw.start, sw.stop, sw.step)) {
            require_ok(
                lifi_scenario_set_ue_position(point.get(),
                                              ap[0] + r * std::cos(bearing),
                                              ap[1] + r * std::sin(bearing),
                                              ue[2]),
                "UE position");
            double pr = 0.0;
            require_ok(lifi_prob_los_blocked(point.get(), theta, &pr),
                       "blockage probability");
            table.row({fmt9(r), fmt9(psi_c), fmt9(pr)});
        }
    }
    return 0;
}

int cmd_snr_dist(const ScenarioPtr& scenario, std::uint64_t samples,
                 std::uint64_t seed, int workers, int points,
                 const std::string& out, const std::string& format,
                 const std::string& summary_out)
{
    lifi_snr_model m;
    require_ok(lifi_snr_model_of(scenario.get(), &m), "SNR model");
    if (m.gain.degenerate)
        throw CliError{kExitConfig,
                       "the tilt model is centered exactly on the optimum "
                       "tilt; the SNR density is a point mass"};

    const double s_lo = m.s_min > 0.0 ? m.s_min : m.s_max * 1e-7;
    const double db_lo = to_db(s_lo);
    const double db_hi = to_db(m.s_max);

    {
        TableWriter table(out, format, {"snr_db", "pdf", "cdf"});
        for (int k = 0; k <= points; ++k) {
            const double db = db_lo + (db_hi - db_lo) * k / points;
            const double s = std::pow(10.0, db / 10.0);
            double pdf = 0.0, cdf = 0.0;
            require_ok(lifi_snr_pdf(scenario.get(), s, &pdf), "SNR pdf");
            require_ok(lifi_snr_cdf(scenario.get(), s, &cdf), "SNR cdf");
            table.row({fmt9(db), fmt9(pdf), fmt9(cdf)});
        }
    }

    const lifi_mc_config cfg{samples, seed, 100, workers};
    lifi_empirical* raw = nullptr;
    require_ok(lifi_simulate_gain(scenario.get(), &cfg, &raw), "sampling");
    EmpiricalPtr emp(raw);

    double ks = 0.0;
    require_ok(lifi_ks_gain_model(scenario.get(), emp.get(), &ks), "KS");

    nlohmann::json j;
    j["c_h_analytic"] = m.gain.c_h;
    j["c_h_empirical"] = lifi_empirical_point_mass_at_zero(emp.get());
    j["ks"] = ks;
    j["n_samples"] = samples;
    if (summary_out.empty())
        std::cerr << j.dump(2) << "\n";
    else
        emit_json(j, summary_out);
    return 0;
}

int cmd_ber_curve(const ScenarioPtr& scenario, std::vector<int> mqam_list,
                  std::vector<std::string> modes, std::uint64_t samples,
                  std::uint64_t seed, int workers, const std::string& out,
                  const std::string& format)
{
    if (mqam_list.empty())
        mqam_list = {4};
    if (modes.empty())
        modes = {"vertical", "approx", "exact"};
    for (const std::string& mode : modes) {
        if (mode != "vertical" && mode != "fixed-theta" && mode != "random"
            && mode != "approx" && mode != "exact" && mode != "mc")
            throw CliError{kExitConfig, "unknown ber mode: " + mode};
    }

    const lifi_sweep sw = sweep_or(scenario, "p_opt", 0.25, 5.0, 0.25);
    if (std::strcmp(sw.variable, "p_opt") != 0)
        throw CliError{kExitConfig, "ber-curve expects a p_opt sweep"};

    lifi_orientation base;
    require_ok(lifi_scenario_get_orientation(scenario.get(), &base),
               "orientation");

    TableWriter table(out, format, {"p_opt", "mode", "mqam", "ber"});
    for (double p_opt : sweep_grid(sw.start, sw.stop, sw.step)) {
        ScenarioPtr point = clone(scenario);
        require_ok(lifi_scenario_set_p_opt(point.get(), p_opt), "p_opt");

        for (const std::string& mode : modes) {
            for (int mqam : mqam_list) {
                double ber = 0.0, se = 0.0;
                if (mode == "vertical" || mode == "fixed-theta") {
                    ScenarioPtr fixed = clone(point);
                    lifi_orientation o = base;
                    o.theta_model = LIFI_THETA_FIXED;
                    o.theta = mode == "vertical" ? 0.0 : base.theta;
                    require_ok(
                        lifi_scenario_set_orientation(fixed.get(), &o),
                        "orientation");
                    const lifi_mc_config one{1, seed, 10, 1};
                    require_ok(lifi_simulate_ber_orientation(
                                   fixed.get(), mqam, &one, &ber, &se),
                               "ber");
                } else if (mode == "approx") {
                    int clamped = 0;
                    require_ok(lifi_ber_approx(point.get(), mqam, &ber,
                                               &clamped),
                               "ber-approx");
                } else if (mode == "exact") {
                    require_ok(lifi_ber_exact(point.get(), mqam, &ber),
                               "ber-exact");
                } else if (mode == "random") {
                    const lifi_mc_config cfg{samples, seed, 100, workers};
                    require_ok(lifi_simulate_ber(point.get(), mqam, &cfg,
                                                 &ber, &se),
                               "ber-random");
                } else { // mc
                    const lifi_mc_config cfg{samples, seed, 100, workers};
                    require_ok(lifi_simulate_ber_orientation(
                                   point.get(), mqam, &cfg, &ber, &se),
                               "ber-mc");
                }
                table.row({fmt9(p_opt), mode, std::to_string(mqam),
                           fmt9(ber)});
            }
        }
    }
    return 0;
}

int cmd_mc_validate(const ScenarioPtr& scenario, std::uint64_t samples,
                    std::uint64_t seed, int workers, double perturb_mu,
                    const std::string& out)
{
    nlohmann::json report;
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, nlohmann::json detail) {
        detail["pass"] = ok;
        report[name] = detail;
        all_ok = all_ok && ok;
    };

    lifi_gain_distribution dist;
    require_ok(lifi_gain_distribution_of(scenario.get(), &dist),
               "gain distribution");
    if (dist.degenerate)
        throw CliError{kExitConfig,
                       "degenerate gain model: mc-validate needs a spread "
                       "tilt distribution"};

    // Sampling world, optionally with a perturbed tilt center to exercise
    // the mismatch detector.
    ScenarioPtr world = clone(scenario);
    if (perturb_mu != 0.0) {
        lifi_orientation o;
        require_ok(lifi_scenario_get_orientation(world.get(), &o),
                   "orientation");
        o.mu_theta += perturb_mu;
        require_ok(lifi_scenario_set_orientation(world.get(), &o),
                   "orientation");
    }

    const lifi_mc_config cfg{samples, seed, 100, workers};
    lifi_empirical* raw_a = nullptr;
    lifi_empirical* raw_b = nullptr;
    require_ok(lifi_simulate_gain(world.get(), &cfg, &raw_a), "sampling");
    require_ok(lifi_simulate_gain(world.get(), &cfg, &raw_b), "sampling");
    EmpiricalPtr emp(raw_a), emp2(raw_b);

    // Repeatability of the seeded run.
    bool identical =
        lifi_empirical_point_mass_at_zero(emp.get())
            == lifi_empirical_point_mass_at_zero(emp2.get())
        && lifi_empirical_bin_count(emp.get())
               == lifi_empirical_bin_count(emp2.get());
    for (int i = 0; identical && i < lifi_empirical_bin_count(emp.get());
         ++i) {
        double lo_a, hi_a, lo_b, hi_b;
        uint64_t ca, cb;
        lifi_empirical_bin(emp.get(), i, &lo_a, &hi_a, &ca);
        lifi_empirical_bin(emp2.get(), i, &lo_b, &hi_b, &cb);
        identical = ca == cb && lo_a == lo_b && hi_a == hi_b;
    }
    check("determinism", identical, {{"seed", seed}});

    // Zero-gain mass against the analytic atom.
    const double emp_mass = lifi_empirical_point_mass_at_zero(emp.get());
    const double bound = std::max(
        0.005, 4.0 * std::sqrt(dist.c_h * (1.0 - dist.c_h)
                               / static_cast<double>(samples)));
    check("zero_mass",
          std::abs(emp_mass - dist.c_h) < bound,
          {{"analytic", dist.c_h}, {"empirical", emp_mass}, {"bound", bound}});

    // Distribution shape against the analytic model.
    double ks = 0.0;
    const lifi_status ks_st = lifi_ks_gain_model(scenario.get(), emp.get(), &ks);
    const double ks_threshold = 0.05;
    check("model_ks",
          ks_st == LIFI_OK && ks < ks_threshold,
          {{"ks", ks}, {"threshold", ks_threshold}});

    // Total probability mass of the analytic model.
    double total = 0.0;
    require_ok(lifi_gain_cdf(scenario.get(), dist.h_max, &total), "gain cdf");
    check("total_mass", total > 0.95 && total < 1.05, {{"total", total}});

    // Sampling route vs quadrature route to the average BER.
    double ber_mc = 0.0, se = 0.0, ber_quad = 0.0;
    require_ok(lifi_simulate_ber(scenario.get(), 4, &cfg, &ber_mc, &se),
               "ber sampling");
    require_ok(lifi_ber_exact(scenario.get(), 4, &ber_quad), "ber quadrature");
    check("ber_quadrature_vs_sampling",
          std::abs(ber_mc - ber_quad) <= 3.0 * se + 1e-9,
          {{"sampled", ber_mc},
           {"quadrature", ber_quad},
           {"std_error", se}});

    report["n_samples"] = samples;
    report["all_pass"] = all_ok;
    emit_json(report, out);
    return all_ok ? 0 : kExitValidation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Link-level LiFi downlink simulator: LOS gain under device "
                 "orientation, orientation statistics, and DCO-OFDM error "
                 "rates"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "-";
    std::string format = "csv";
    std::uint64_t seed = 20001;
    std::uint64_t samples = 1000000;
    int workers = 4;

    app.add_option("--config", config_path, "scenario file (sectioned or JSON)")
        ->expected(1);
    app.add_option("--seed", seed, "master seed for sampling runs");
    app.add_option("--out", out_path, "output path, '-' for stdout");
    app.add_option("--format", format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--samples", samples, "Monte-Carlo sample count");
    app.add_option("--workers", workers, "sampling worker threads");
    app.fallthrough();

    auto* sweep_cmd = app.add_subcommand(
        "gain-sweep", "LOS gain over a tilt or facing-direction sweep");

    auto* range_cmd = app.add_subcommand(
        "omega-range", "admissible facing directions at a given tilt");
    double range_theta = -1.0;
    range_cmd->add_option("--theta", range_theta,
                          "tilt in degrees (default: scenario tilt)");

    auto* outage_cmd = app.add_subcommand(
        "outage-profile", "blockage probability versus horizontal distance");
    double outage_theta = 41.0;
    std::vector<double> psi_c_list;
    outage_cmd->add_option("--theta", outage_theta, "tilt in degrees");
    outage_cmd->add_option("--psi-c", psi_c_list,
                           "FOV half-angles to profile (repeatable)");

    auto* snr_cmd = app.add_subcommand(
        "snr-dist", "SNR density/CDF table plus a sampling summary");
    int snr_points = 200;
    std::string summary_out;
    snr_cmd->add_option("--points", snr_points, "table rows");
    snr_cmd->add_option("--summary", summary_out,
                        "summary JSON path (default: stderr)");

    auto* ber_cmd = app.add_subcommand(
        "ber-curve", "average BER versus transmitted optical power");
    std::vector<int> mqam_list;
    std::vector<std::string> modes;
    ber_cmd->add_option("--mqam", mqam_list, "QAM orders (repeatable)");
    ber_cmd->add_option(
        "--mode", modes,
        "vertical | fixed-theta | random | approx | exact | mc (repeatable)");

    auto* validate_cmd = app.add_subcommand(
        "mc-validate", "cross-check sampling against the closed forms");
    double perturb_mu = 0.0;
    validate_cmd->add_option("--perturb-mu-theta", perturb_mu,
                             "offset the sampled tilt center (detector test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return kExitConfig;
    }

    try {
        const ScenarioPtr scenario = load_or_default(config_path);

        if (sweep_cmd->parsed())
            return cmd_gain_sweep(scenario, out_path, format);
        if (range_cmd->parsed()) {
            const double theta = range_cmd->count("--theta")
                                     ? range_theta
                                     : default_theta(scenario);
            return cmd_omega_range(scenario, theta, out_path);
        }
        if (outage_cmd->parsed())
            return cmd_outage_profile(scenario, outage_theta, psi_c_list,
                                      out_path, format);
        if (snr_cmd->parsed())
            return cmd_snr_dist(scenario, samples, seed, workers, snr_points,
                                out_path, format, summary_out);
        if (ber_cmd->parsed())
            return cmd_ber_curve(scenario, mqam_list, modes, samples, seed,
                                 workers, out_path, format);
        if (validate_cmd->parsed())
            return cmd_mc_validate(scenario, samples, seed, workers,
                                   perturb_mu, out_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
