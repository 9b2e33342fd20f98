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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsg/config.hpp"
#include "qsg/error.hpp"
#include "qsg/interference.hpp"
#include "qsg/trace.hpp"

namespace qsg::app {

/// 0 ok, 2 config or usage error, 3 acceptance failure, 4 protocol refusal,
/// 5 numerical failure.
int exit_code_for(ErrorCode code);

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Table &table, const std::string &header);
std::string render_json(const Table &table, const std::string &header);
std::string render(const Table &table, const std::string &header, const std::string &format);

struct OutputFile {
    std::string name;
    std::string content;
};

struct CommandResult {
    int exit_code = 0;
    std::string console;
    std::vector<std::string> warnings;
    std::vector<OutputFile> files;
};

// reproduce

struct ReproduceRow {
    std::string quantity;
    double simulated = 0;
    std::optional<double> reference;  // published value, when there is one
    std::string tolerance;            // empty for informational rows
    bool checked = false;
    bool pass = true;

    std::optional<double> relative_deviation() const;
};

std::vector<ReproduceRow> reproduce_rows(const RunConfig &config);
Table reproduce_table(const std::vector<ReproduceRow> &rows);
CommandResult cmd_reproduce(const RunConfig &config);

// protocol

struct ProtocolRun {
    ProtocolTrace trace;
    interference::FringePattern pattern;
};

/// Throws ApproximationInvalid or DecoherenceBudgetExceeded when the run is
/// refused.
ProtocolRun run_protocol(const RunConfig &config);
CommandResult cmd_protocol(const RunConfig &config);

// sweep

struct SweepRequest {
    std::string parameter;  // dt, v0_x, N, I_c, C_j, z_pass
    std::vector<double> values;
};

/// Linear (or logarithmic) grid with `steps` points including both ends.
std::vector<double> sweep_values(double from, double to, int steps, bool log_spacing = false);

struct SweepRow {
    double value = 0;
    double v0_x = 0;
    double dt = 0;
    double p_L = 0;
    double p_R = 0;
    double dp_z = 0;
    double dP_z = 0;
    double ratio = 0;
    coupling::Regime regime = coupling::Regime::Product;
    double margin = 0;
    std::optional<double> period;  // empty when the impulse model is not valid
    double nominal_period = 0;
};

bool is_sweepable(const std::string &parameter);
SweepRow evaluate_point(const RunConfig &config);
std::vector<SweepRow> run_sweep(const RunConfig &config, const SweepRequest &request);
Table sweep_table(const SweepRequest &request, const std::vector<SweepRow> &rows);
CommandResult cmd_sweep(const RunConfig &config, const SweepRequest &request);

// fields-map

struct FieldsMapRequest {
    std::optional<double> z_center;  // defaults to trajectory.z_pass
    double rho_extent = 2e-6;
    double z_extent = 1e-6;
    int n = 21;
};

CommandResult cmd_fields_map(const RunConfig &config, const FieldsMapRequest &request);

}  // namespace qsg::app
