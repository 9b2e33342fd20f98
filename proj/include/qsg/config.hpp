// Copyright 2026 The qsg-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qsg/bec.hpp"
#include "qsg/coupling.hpp"
#include "qsg/fields.hpp"
#include "qsg/fluxqubit.hpp"

namespace qsg {

/// Everything a command needs. Defaults reproduce the reference setup; the
/// ones without a published value (C_j, v0_x, window, timing) are artifact
/// choices documented in the README.
struct RunConfig {
    // [loop]
    double r_inner = 2.0e-6;
    double r_outer = 2.5e-6;
    double thickness = 1.0e-6;
    // [qubit]
    double L = 6.44e-12;
    double C_j = 1e-15;
    std::optional<double> I_c;  // unset means Phi0 / 4L
    double phi_a = 0.5;         // in units of Phi0
    int grid_n = 4096;
    // [bec]
    std::int64_t N = 100000;
    double sigma_x = 5.0e-6;
    double sigma_y = 1.0e-6;
    double sigma_z = 1.0e-6;
    int F = 2;
    int m_F = 2;
    double g_F = 0.5;
    double mass = kPhysical.m_Rb87;
    // [trajectory]
    double v0_x = 4.5;
    double z_pass = 1.25e-6;
    double window = 30e-6;
    int steps = 8001;
    double g = kPhysical.g_grav;
    // [timing]
    double t_h = 1e-7;
    double t_m = 1e-7;
    double t_d = 1e-4;
    // [thresholds]
    double strong_ratio = 10.0;
    double product_ratio = 0.1;
    double budget_margin = 10.0;
    double kick_spread_fraction = 0.1;
    double backaction_negligible = 1e-2;
    double gradient_fraction = 0.05;
    // [run]
    std::uint64_t seed = 42;
    std::string out = ".";
    std::string format = "csv";

    fluxqubit::FluxQubitParams qubit_params() const;
    fluxqubit::FluxGrid flux_grid() const;
    fields::LoopGeometry loop() const;
    bec::PacketConfig packet_config() const;
    SpinState spin() const { return {F, m_F, g_F}; }
    coupling::Thresholds thresholds() const;
    bec::KickOptions kick_options() const;
    coupling::TimingBudget budget(double dt) const { return {dt, t_h, t_m, t_d}; }
};

/// INI-style text: `[section]` headers, `key = value` lines, `#` comments.
/// Keys are addressed as `section.key`.
RunConfig parse_config(std::string_view text, std::string_view source_name = "<config>");
RunConfig load_config(const std::string &path);

/// Applies one `section.key=value` override.
void apply_override(RunConfig &config, std::string_view assignment);
void set_value(RunConfig &config, std::string_view key, std::string_view value);
std::string get_value(const RunConfig &config, std::string_view key);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig &config);

/// 64-bit FNV-1a of the physics sections (everything except [run]) as hex.
std::string config_hash(const RunConfig &config);

/// `# qsg-sim v<version> config=<hash> seed=<seed>`
std::string file_header(const RunConfig &config);

bool operator==(const RunConfig &a, const RunConfig &b);

}  // namespace qsg
