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
#include "qsg/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qsg/backaction.hpp"
#include "qsg/bec.hpp"
#include "qsg/coupling.hpp"
#include "qsg/fields.hpp"
#include "qsg/fluxqubit.hpp"

namespace qsg::app {

namespace {

std::string format_double(double v, const char *fmt = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string cell_text(const Cell &cell) {
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    return "";
}

nlohmann::ordered_json cell_json(const Cell &cell) {
    if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    return nullptr;
}

Cell optional_cell(const std::optional<double> &v) { return v ? Cell{*v} : Cell{}; }

struct Setup {
    fluxqubit::FluxQubitParams params;
    fluxqubit::DoubleWellSummary summary;
    fields::LoopGeometry loop;
    bec::BECPacket packet;
};

Setup make_setup(const RunConfig &config) {
    Setup s;
    s.params = config.qubit_params();
    s.summary = fluxqubit::two_gaussian_summary(s.params, config.flux_grid());
    s.loop = config.loop();
    s.packet = bec::make_packet(config.packet_config());
    return s;
}

bec::KickReport trajectory_kicks(const RunConfig &config, const Setup &s, double v0_x) {
    const auto tr = bec::crossing_trajectory(s.packet, config.z_pass, v0_x, config.window, config.steps, config.g);
    return bec::kick_integral(s.packet, tr, s.summary, s.loop, config.window, config.kick_options());
}

ReproduceRow relative_row(std::string quantity, double simulated, double reference, double tolerance) {
    ReproduceRow row{std::move(quantity), simulated, reference, "rel<=" + format_double(tolerance, "%g"), true, true};
    row.pass = std::abs(simulated - reference) <= tolerance * std::abs(reference);
    return row;
}

ReproduceRow info_row(std::string quantity, double simulated, std::optional<double> reference = std::nullopt) {
    return {std::move(quantity), simulated, reference, "", false, true};
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Config:
        case ErrorCode::Usage:
        case ErrorCode::InvalidArgument:
            return 2;
        case ErrorCode::ApproximationInvalid:
        case ErrorCode::DecoherenceBudgetExceeded:
            return 4;
        case ErrorCode::Domain:
        case ErrorCode::Singularity:
        case ErrorCode::NoDoubleWell:
        case ErrorCode::GridTooNarrow:
        case ErrorCode::NoInteraction:
            return 5;
    }
    return 5;
}

std::string render_csv(const Table &table, const std::string &header) {
    std::ostringstream out;
    out << header << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
    return out.str();
}

std::string render_json(const Table &table, const std::string &header) {
    nlohmann::ordered_json j;
    j["header"] = header;
    j["columns"] = table.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string render(const Table &table, const std::string &header, const std::string &format) {
    if (format == "json") return render_json(table, header);
    if (format == "csv") return render_csv(table, header);
    throw Error(ErrorCode::Usage, "unknown format '" + format + "'");
}

// reproduce

std::optional<double> ReproduceRow::relative_deviation() const {
    if (!reference || *reference == 0.0) return std::nullopt;
    return (simulated - *reference) / std::abs(*reference);
}

std::vector<ReproduceRow> reproduce_rows(const RunConfig &config) {
    const Setup s = make_setup(config);
    const double Phi0 = kPhysical.Phi0;
    const double R = s.loop.r_mean;
    std::vector<ReproduceRow> rows;

    rows.push_back(relative_row("self_inductance_H", fields::loop_self_inductance(s.loop), 6.44e-12, 0.15));
    rows.push_back(relative_row("persistent_current_L_A", s.summary.I_L, -80.3e-6, 0.005));
    rows.push_back(relative_row("persistent_current_R_A", s.summary.I_R, 80.3e-6, 0.005));

    const double bias_flux = 65e-6 * std::numbers::pi * R * R;
    rows.push_back(relative_row("bias_flux_over_half_flux_quantum", bias_flux / (Phi0 / 2), 1.0, 0.005));

    const double I = std::abs(s.summary.I_L);
    const double z_ext = fields::onaxis_gradient_extremum_z(R);
    rows.push_back(info_row("max_gradient_T_per_m", std::abs(fields::onaxis_dBz_dz(I, R, z_ext)), 8.18));
    rows.push_back(info_row("max_gradient_location_m", z_ext, 1.25e-6));
    rows.push_back(relative_row("max_gradient_location_over_half_radius", z_ext / (R / 2), 1.0, 0.005));
    rows.push_back(
        relative_row("gradient_at_z_pass_T_per_m", std::abs(fields::onaxis_dBz_dz(I, R, config.z_pass)), 8.18, 0.10));

    rows.push_back(info_row("delta_phi_Wb", s.summary.delta_phi));
    rows.push_back(relative_row("delta_phi_over_well_separation",
                                s.summary.delta_phi / (s.summary.phi_R - s.summary.phi_L), 0.063, 0.10));
    {
        ReproduceRow row = info_row("two_gaussian_fidelity", s.summary.fidelity);
        row.tolerance = ">0.99";
        row.checked = true;
        row.pass = s.summary.fidelity > 0.99;
        rows.push_back(row);
    }

    const auto weak = bec::weak_coupling_threshold(s.packet, s.summary, s.loop, config.z_pass, config.window,
                                                   config.steps, config.g, config.kick_options());
    {
        ReproduceRow row = info_row("weak_coupling_dt_s", weak.dt, 2.0e-6);
        row.tolerance = "in[5e-07,4e-06]";
        row.checked = true;
        row.pass = weak.dt >= 0.5e-6 && weak.dt <= 4.0e-6;
        rows.push_back(row);
    }
    rows.push_back(info_row("weak_coupling_v0_x_m_per_s", weak.v0_x));

    const auto ba = backaction::backaction_ratio(config.spin(), config.N, R, config.z_pass,
                                                 config.backaction_negligible);
    rows.push_back(relative_row("backaction_ratio", ba.ratio, 8.4e-5, 0.05));
    {
        const auto big = backaction::backaction_ratio(config.spin(), 100000000, R, config.z_pass,
                                                      config.backaction_negligible);
        ReproduceRow row = info_row("backaction_ratio_N1e8", big.ratio, 8.4e-2);
        row.tolerance = "not_negligible";
        row.checked = true;
        row.pass = !big.negligible;
        rows.push_back(row);
    }
    return rows;
}

Table reproduce_table(const std::vector<ReproduceRow> &rows) {
    Table t;
    t.columns = {"quantity", "simulated", "published", "relative_deviation", "tolerance", "status"};
    for (const auto &r : rows) {
        t.rows.push_back({r.quantity, r.simulated, optional_cell(r.reference), optional_cell(r.relative_deviation()),
                          r.tolerance, std::string(r.checked ? (r.pass ? "PASS" : "FAIL") : "info")});
    }
    return t;
}

CommandResult cmd_reproduce(const RunConfig &config) {
    const auto rows = reproduce_rows(config);
    const std::string text = render(reproduce_table(rows), file_header(config), config.format);
    CommandResult result;
    result.console = text;
    result.files.push_back({"reproduce." + config.format, text});
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const ReproduceRow &r) { return r.pass; });
    result.exit_code = ok ? 0 : 3;
    return result;
}

// protocol

ProtocolRun run_protocol(const RunConfig &config) {
    const Setup s = make_setup(config);
    const auto kicks = trajectory_kicks(config, s, config.v0_x);
    const auto thresholds = config.thresholds();

    ProtocolRun run;
    ProtocolTrace &t = run.trace;
    t.header = file_header(config);
    t.seed = config.seed;
    t.qubit = s.summary;
    t.kicks = kicks;
    t.regime = coupling::classify_regime(kicks, thresholds);
    t.budget = config.budget(kicks.dt);
    t.budget_margin = t.budget.margin();

    const auto state = coupling::entangle(s.packet, kicks, fluxqubit::QubitLogicalState::symmetric_ground(), 0.0,
                                          thresholds);
    t.N = state.N;
    t.single_atom_overlap = state.single_atom_overlap();
    t.schmidt_rank = state.schmidt_rank();
    t.degraded = state.degraded;

    const auto post = coupling::apply_hadamard(state);
    t.qubit_after_hadamard = post.qubit_after;
    t.p_L = post.p_L;
    t.p_R = post.p_R;

    const auto pe = coupling::hadamard_and_measure(state, t.budget, config.seed, thresholds);
    t.outcome = pe.outcome;
    t.sign = pe.sign;
    t.outcome_probability = pe.probability;
    t.collapse_norm = pe.norm;
    t.c1 = pe.c1;
    t.c2 = pe.c2;

    const double delta_p = std::abs(kicks.p_R - kicks.p_L);
    run.pattern = interference::recombined_pattern(pe, delta_p, config.sigma_z,
                                                   interference::suggested_points(state.N, delta_p, config.sigma_z));
    t.fringe_period = run.pattern.period;
    t.nominal_period = interference::nominal_period(state.N, delta_p);
    t.visibility = run.pattern.visibility;
    return run;
}

CommandResult cmd_protocol(const RunConfig &config) {
    const auto run = run_protocol(config);
    CommandResult result;
    result.files.push_back({"trace.json", trace_to_json(run.trace)});
    result.files.push_back({"pattern.csv", interference::export_pattern(run.pattern, run.trace.header)});
    if (!run.trace.kicks.impulse_ok) {
        result.warnings.push_back("kick velocity exceeds 10% of the fall velocity; straight-path impulse model is "
                                  "approximate");
    }
    if (run.trace.degraded) {
        result.warnings.push_back("kick spread dP_z is not small against dp_z; branch coherence is degraded");
    }
    std::ostringstream out;
    out << run.trace.header << '\n'
        << "regime=" << coupling::regime_name(run.trace.regime.regime)
        << " ratio=" << format_double(run.trace.regime.ratio, "%.6g")
        << " margin=" << format_double(run.trace.budget_margin, "%.6g")
        << " outcome=" << (run.trace.outcome == fluxqubit::FluxOutcome::L ? "L" : "R")
        << " period=" << (run.trace.fringe_period ? format_double(*run.trace.fringe_period, "%.6g") : "none")
        << '\n';
    result.console = out.str();
    return result;
}

// sweep

namespace {

const std::vector<std::string> kSweepable = {"dt", "v0_x", "N", "I_c", "C_j", "z_pass"};

double velocity_for_dt(const RunConfig &config, const Setup &s, double dt_target) {
    // The interaction time scales close to 1/v; a few fixed-point rescalings
    // absorb the gravity correction.
    double v = config.v0_x;
    for (int iter = 0; iter < 4; ++iter) {
        const double dt = trajectory_kicks(config, s, v).dt;
        v *= dt / dt_target;
    }
    return v;
}

}  // namespace

bool is_sweepable(const std::string &parameter) {
    return std::find(kSweepable.begin(), kSweepable.end(), parameter) != kSweepable.end();
}

std::vector<double> sweep_values(double from, double to, int steps, bool log_spacing) {
    if (steps < 1) throw Error(ErrorCode::Usage, "sweep: steps must be at least 1");
    if (log_spacing && !(from > 0 && to > 0)) throw Error(ErrorCode::Usage, "sweep: log spacing needs positive ends");
    std::vector<double> values(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        values[i] = log_spacing ? std::exp(std::log(from) + f * (std::log(to) - std::log(from)))
                                : from + f * (to - from);
    }
    return values;
}

SweepRow evaluate_point(const RunConfig &config) {
    const Setup s = make_setup(config);
    const auto kicks = trajectory_kicks(config, s, config.v0_x);
    const auto thresholds = config.thresholds();
    const auto regime = coupling::classify_regime(kicks, thresholds);

    SweepRow row;
    row.v0_x = config.v0_x;
    row.dt = kicks.dt;
    row.p_L = kicks.p_L;
    row.p_R = kicks.p_R;
    row.dp_z = kicks.dp_z;
    row.dP_z = kicks.dP_z;
    row.ratio = regime.ratio;
    row.regime = regime.regime;
    row.margin = config.budget(kicks.dt).margin();

    const double delta_p = std::abs(kicks.p_R - kicks.p_L);
    row.nominal_period = interference::nominal_period(s.packet.N, delta_p);
    try {
        const auto state = coupling::entangle(s.packet, kicks, fluxqubit::QubitLogicalState::symmetric_ground(), 0.0,
                                              thresholds);
        const auto post = coupling::apply_hadamard(state);
        const auto pattern = interference::recombined_pattern(
            post.plus, delta_p, config.sigma_z, interference::suggested_points(state.N, delta_p, config.sigma_z));
        row.period = pattern.period;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::ApproximationInvalid) throw;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const RunConfig &config, const SweepRequest &request) {
    if (!is_sweepable(request.parameter)) throw Error(ErrorCode::Usage, "sweep: unknown parameter '" + request.parameter + "'");
    if (request.values.empty()) throw Error(ErrorCode::Usage, "sweep: no values");

    const auto point_config = [&](double value) {
        RunConfig c = config;
        if (request.parameter == "dt") {
            if (!(value > 0)) throw Error(ErrorCode::InvalidArgument, "sweep: dt must be positive");
            c.v0_x = velocity_for_dt(config, make_setup(config), value);
        } else if (request.parameter == "v0_x") {
            c.v0_x = value;
        } else if (request.parameter == "N") {
            c.N = std::llround(value);
        } else if (request.parameter == "I_c") {
            c.I_c = value;
        } else if (request.parameter == "C_j") {
            c.C_j = value;
        } else {
            c.z_pass = value;
        }
        return c;
    };

    std::vector<SweepRow> rows(request.values.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < request.values.size(); start += workers) {
        const std::size_t stop = std::min(request.values.size(), start + workers);
        std::vector<std::future<SweepRow>> batch;
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] {
                SweepRow row = evaluate_point(point_config(request.values[i]));
                row.value = request.parameter == "N" ? static_cast<double>(std::llround(request.values[i]))
                                                     : request.values[i];
                return row;
            }));
        }
        for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
    }
    return rows;
}

Table sweep_table(const SweepRequest &request, const std::vector<SweepRow> &rows) {
    Table t;
    t.columns = {request.parameter, "v0_x", "dt", "p_L", "p_R", "dp_z", "dP_z", "ratio", "regime", "budget_margin",
                 "fringe_period", "nominal_period"};
    for (const auto &r : rows) {
        t.rows.push_back({r.value, r.v0_x, r.dt, r.p_L, r.p_R, r.dp_z, r.dP_z, r.ratio,
                          std::string(coupling::regime_name(r.regime)), r.margin, optional_cell(r.period),
                          r.nominal_period});
    }
    return t;
}

CommandResult cmd_sweep(const RunConfig &config, const SweepRequest &request) {
    const auto rows = run_sweep(config, request);
    const std::string text = render(sweep_table(request, rows), file_header(config), config.format);
    CommandResult result;
    result.console = text;
    result.files.push_back({"sweep_" + request.parameter + "." + config.format, text});
    return result;
}

// fields-map

CommandResult cmd_fields_map(const RunConfig &config, const FieldsMapRequest &request) {
    const Setup s = make_setup(config);
    const double z_center = request.z_center.value_or(config.z_pass);
    const auto map = fields::gradient_flatness_map(std::abs(s.summary.I_L), s.loop.r_mean, z_center, request.rho_extent,
                                                   request.z_extent, request.n);
    Table t;
    t.columns = {"rho_m", "z_m", "dBz_dz_T_per_m"};
    for (Eigen::Index i = 0; i < map.rho.size(); ++i) {
        for (Eigen::Index j = 0; j < map.z.size(); ++j) t.rows.push_back({map.rho(i), map.z(j), map.dBz_dz(i, j)});
    }
    const std::string header = file_header(config) + "\n# reference=" + format_double(map.reference) +
                               " max_relative_deviation=" + format_double(map.max_relative_deviation);
    const std::string text = render(t, header, config.format);
    CommandResult result;
    result.console = "reference=" + format_double(map.reference, "%.6g") +
                     " max_relative_deviation=" + format_double(map.max_relative_deviation, "%.6g") + "\n";
    result.files.push_back({"fields_map." + config.format, text});
    return result;
}

}  // namespace qsg::app
