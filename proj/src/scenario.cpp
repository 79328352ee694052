// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/scenario.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lifi {

namespace {

const std::set<std::string> kSweepVariables = {"theta", "omega", "r", "p_opt"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct KeyValue {
    std::string section;
    std::string key;
    std::string value;
    int line;
    bool is_string;
};

bool parse_number(const std::string& s, double& out)
{
    std::size_t pos = 0;
    try {
        out = std::stod(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == s.size();
}

// Minimal sectioned key-value reader: [section] headers, key = value lines,
// '#' comments, quoted strings or bare numbers.
std::vector<KeyValue> read_key_values(const std::string& text)
{
    std::vector<KeyValue> out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;

    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ScenarioError("line " + std::to_string(line_no)
                                    + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ScenarioError("line " + std::to_string(line_no)
                                + ": expected key = value");
        KeyValue kv;
        kv.section = section;
        kv.key = trim(line.substr(0, eq));
        kv.line = line_no;
        std::string val = trim(line.substr(eq + 1));
        if (!val.empty() && val.front() == '"') {
            if (val.size() < 2 || val.back() != '"')
                throw ScenarioError("line " + std::to_string(line_no)
                                    + ": unterminated string");
            kv.value = val.substr(1, val.size() - 2);
            kv.is_string = true;
        } else {
            kv.value = val;
            kv.is_string = false;
        }
        out.push_back(kv);
    }
    return out;
}

class ScenarioBuilder {
public:
    Scenario scenario;

    void apply(const std::string& section, const std::string& key,
               const std::string& value, bool is_string,
               const std::string& where)
    {
        const std::string path = section.empty() ? key : section + "." + key;
        double num = 0.0;
        const bool numeric = !is_string && parse_number(value, num);
        if (!is_string && !numeric)
            throw ScenarioError(where + ": value of '" + path
                                + "' is neither a number nor a string");

        auto need_number = [&]() {
            if (!numeric)
                throw ScenarioError(where + ": '" + path
                                    + "' expects a number");
            return num;
        };

        if (section == "ap") {
            if (key == "x")
                scenario.ap.x = need_number();
            else if (key == "y")
                scenario.ap.y = need_number();
            else if (key == "z")
                scenario.ap.z = need_number();
            else
                unknown(path, where);
        } else if (section == "ue") {
            if (key == "x")
                scenario.ue.x = need_number();
            else if (key == "y")
                scenario.ue.y = need_number();
            else if (key == "z")
                scenario.ue.z = need_number();
            else
                unknown(path, where);
        } else if (section == "phy") {
            if (key == "a_pd")
                scenario.phy.a_pd = need_number();
            else if (key == "phi_half")
                scenario.phy.phi_half = need_number();
            else if (key == "varsigma")
                scenario.phy.varsigma = need_number();
            else if (key == "psi_c")
                scenario.phy.psi_c = need_number();
            else if (key == "r_pd")
                scenario.phy.r_pd = need_number();
            else if (key == "bandwidth")
                scenario.phy.bandwidth = need_number();
            else if (key == "subcarriers")
                scenario.phy.k_total = static_cast<int>(need_number());
            else if (key == "n0")
                scenario.phy.n0 = need_number();
            else if (key == "eta")
                scenario.phy.eta = need_number();
            else if (key == "p_opt")
                scenario.phy.p_opt = need_number();
            else
                unknown(path, where);
        } else if (section == "orientation") {
            if (key == "model") {
                if (!is_string || (value != "laplace" && value != "fixed"))
                    throw ScenarioError(
                        where + ": orientation.model must be \"laplace\" or "
                                "\"fixed\"");
                scenario.orientation.theta_model =
                    value == "laplace"
                        ? OrientationConfig::ThetaModel::Laplace
                        : OrientationConfig::ThetaModel::Fixed;
            } else if (key == "theta") {
                scenario.orientation.theta = need_number();
            } else if (key == "mu_theta") {
                scenario.orientation.mu_theta = need_number();
            } else if (key == "sigma_theta") {
                scenario.orientation.sigma_theta = need_number();
            } else if (key == "omega") {
                if (is_string) {
                    if (value != "uniform")
                        throw ScenarioError(
                            where
                            + ": orientation.omega must be a number or "
                              "\"uniform\"");
                    scenario.orientation.omega_model =
                        OrientationConfig::OmegaModel::Uniform;
                } else {
                    scenario.orientation.omega_model =
                        OrientationConfig::OmegaModel::Fixed;
                    scenario.orientation.omega = need_number();
                }
            } else {
                unknown(path, where);
            }
        } else if (section == "sweep") {
            scenario.sweep.active = true;
            if (key == "variable") {
                if (!is_string || kSweepVariables.count(value) == 0)
                    throw ScenarioError(
                        where + ": sweep.variable must be one of theta, "
                                "omega, r, p_opt");
                scenario.sweep.variable = value;
            } else if (key == "start") {
                scenario.sweep.start = need_number();
            } else if (key == "stop") {
                scenario.sweep.stop = need_number();
            } else if (key == "step") {
                scenario.sweep.step = need_number();
            } else {
                unknown(path, where);
            }
        } else {
            unknown(path, where);
        }
    }

private:
    [[noreturn]] static void unknown(const std::string& path,
                                     const std::string& where)
    {
        throw ScenarioError(where + ": unknown key '" + path + "'");
    }
};

Scenario parse_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("JSON parse error: ") + e.what());
    }

    ScenarioBuilder builder;
    if (!j.is_object())
        throw ScenarioError("scenario JSON must be an object of sections");
    for (const auto& [section, body] : j.items()) {
        if (!body.is_object())
            throw ScenarioError("section '" + section
                                + "' must be an object");
        for (const auto& [key, value] : body.items()) {
            const std::string where = "key " + section + "." + key;
            if (value.is_string())
                builder.apply(section, key, value.get<std::string>(), true,
                              where);
            else if (value.is_number())
                builder.apply(section, key, fmt(value.get<double>()), false,
                              where);
            else
                throw ScenarioError(where
                                    + ": value must be a number or string");
        }
    }
    builder.scenario.validate();
    return builder.scenario;
}

} // namespace

void Scenario::validate() const
{
    try {
        phy.validate();
    } catch (const std::domain_error& e) {
        throw ScenarioError(std::string("phy: ") + e.what());
    }
    if (!(ap.z > ue.z))
        throw ScenarioError("the AP must be strictly above the UE");
    const auto& o = orientation;
    if (o.theta_model == OrientationConfig::ThetaModel::Fixed) {
        if (!(o.theta >= 0.0 && o.theta <= 90.0))
            throw ScenarioError("orientation.theta must lie in [0, 90]");
    } else {
        if (!(o.mu_theta >= 0.0 && o.mu_theta <= 90.0))
            throw ScenarioError("orientation.mu_theta must lie in [0, 90]");
        if (!(o.sigma_theta > 0.0))
            throw ScenarioError("orientation.sigma_theta must be positive");
    }
    if (o.omega_model == OrientationConfig::OmegaModel::Fixed
        && !(o.omega >= 0.0 && o.omega < 360.0))
        throw ScenarioError("orientation.omega must lie in [0, 360)");
    if (sweep.active) {
        if (kSweepVariables.count(sweep.variable) == 0)
            throw ScenarioError(
                "sweep.variable must be one of theta, omega, r, p_opt");
        if (!(sweep.step > 0.0))
            throw ScenarioError("sweep.step must be positive");
        if (!(sweep.stop >= sweep.start))
            throw ScenarioError("sweep.stop must be >= sweep.start");
    }
}

Scenario parse_scenario(const std::string& text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return parse_json(text);
        break;
    }

    ScenarioBuilder builder;
    for (const KeyValue& kv : read_key_values(text))
        builder.apply(kv.section, kv.key, kv.value, kv.is_string,
                      "line " + std::to_string(kv.line));
    builder.scenario.validate();
    return builder.scenario;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s)
{
    std::ostringstream out;
    out << "[ap]\n"
        << "x = " << fmt(s.ap.x) << "\n"
        << "y = " << fmt(s.ap.y) << "\n"
        << "z = " << fmt(s.ap.z) << "\n\n"
        << "[ue]\n"
        << "x = " << fmt(s.ue.x) << "\n"
        << "y = " << fmt(s.ue.y) << "\n"
        << "z = " << fmt(s.ue.z) << "\n\n"
        << "[phy]\n"
        << "a_pd = " << fmt(s.phy.a_pd) << "\n"
        << "phi_half = " << fmt(s.phy.phi_half) << "\n"
        << "varsigma = " << fmt(s.phy.varsigma) << "\n"
        << "psi_c = " << fmt(s.phy.psi_c) << "\n"
        << "r_pd = " << fmt(s.phy.r_pd) << "\n"
        << "bandwidth = " << fmt(s.phy.bandwidth) << "\n"
        << "subcarriers = " << s.phy.k_total << "\n"
        << "n0 = " << fmt(s.phy.n0) << "\n"
        << "eta = " << fmt(s.phy.eta) << "\n"
        << "p_opt = " << fmt(s.phy.p_opt) << "\n\n"
        << "[orientation]\n"
        << "model = "
        << (s.orientation.theta_model
                    == OrientationConfig::ThetaModel::Laplace
                ? "\"laplace\""
                : "\"fixed\"")
        << "\n"
        << "theta = " << fmt(s.orientation.theta) << "\n"
        << "mu_theta = " << fmt(s.orientation.mu_theta) << "\n"
        << "sigma_theta = " << fmt(s.orientation.sigma_theta) << "\n";
    if (s.orientation.omega_model == OrientationConfig::OmegaModel::Uniform)
        out << "omega = \"uniform\"\n";
    else
        out << "omega = " << fmt(s.orientation.omega) << "\n";
    if (s.sweep.active) {
        out << "\n[sweep]\n"
            << "variable = \"" << s.sweep.variable << "\"\n"
            << "start = " << fmt(s.sweep.start) << "\n"
            << "stop = " << fmt(s.sweep.stop) << "\n"
            << "step = " << fmt(s.sweep.step) << "\n";
    }
    return out.str();
}

std::string serialize_scenario_json(const Scenario& s)
{
    nlohmann::json j;
    j["ap"] = {{"x", s.ap.x}, {"y", s.ap.y}, {"z", s.ap.z}};
    j["ue"] = {{"x", s.ue.x}, {"y", s.ue.y}, {"z", s.ue.z}};
    j["phy"] = {{"a_pd", s.phy.a_pd},
                {"phi_half", s.phy.phi_half},
                {"varsigma", s.phy.varsigma},
                {"psi_c", s.phy.psi_c},
                {"r_pd", s.phy.r_pd},
                {"bandwidth", s.phy.bandwidth},
                {"subcarriers", s.phy.k_total},
                {"n0", s.phy.n0},
                {"eta", s.phy.eta},
                {"p_opt", s.phy.p_opt}};
    j["orientation"]["model"] =
        s.orientation.theta_model == OrientationConfig::ThetaModel::Laplace
            ? "laplace"
            : "fixed";
    j["orientation"]["theta"] = s.orientation.theta;
    j["orientation"]["mu_theta"] = s.orientation.mu_theta;
    j["orientation"]["sigma_theta"] = s.orientation.sigma_theta;
    if (s.orientation.omega_model == OrientationConfig::OmegaModel::Uniform)
        j["orientation"]["omega"] = "uniform";
    else
        j["orientation"]["omega"] = s.orientation.omega;
    if (s.sweep.active) {
        j["sweep"] = {{"variable", s.sweep.variable},
                      {"start", s.sweep.start},
                      {"stop", s.sweep.stop},
                      {"step", s.sweep.step}};
    }
    return j.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ScenarioError("cannot write scenario file: " + path);
    const bool json = path.size() >= 5
                   && path.compare(path.size() - 5, 5, ".json") == 0;
    out << (json ? serialize_scenario_json(s) : serialize_scenario(s));
}

bool scenario_equal(const Scenario& a, const Scenario& b)
{
    return serialize_scenario(a) == serialize_scenario(b);
}

} // namespace lifi
