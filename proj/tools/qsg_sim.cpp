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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsg/app.hpp"
#include "qsg/config.hpp"
#include "qsg/error.hpp"

namespace {

void write_outputs(const std::string &dir, const qsg::app::CommandResult &result) {
    std::filesystem::create_directories(dir);
    for (const auto &file : result.files) {
        const auto path = std::filesystem::path(dir) / file.name;
        std::ofstream out(path, std::ios::binary);
        out << file.content;
        if (!out) throw qsg::Error(qsg::ErrorCode::Config, path.string() + ": cannot write output file");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App cli{"Flux-qubit controlled Stern-Gerlach simulator"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", std::string("qsg-sim ") + QSG_VERSION);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
    std::vector<std::string> overrides;
    cli.add_option("--config", config_path, "Config file")->check(CLI::ExistingFile);
    cli.add_option("--seed", seed, "RNG seed");
    cli.add_option("--out", out_dir, "Output directory");
    cli.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    cli.add_option("--set", overrides, "Override a config value, section.key=value")->allow_extra_args(false);

    auto *reproduce = cli.add_subcommand("reproduce", "Compare simulated golden numbers with published values");
    auto *protocol = cli.add_subcommand("protocol", "Run entangle, Hadamard, measurement and recombination");

    auto *sweep = cli.add_subcommand("sweep", "Sweep one parameter and tabulate coupling quantities");
    qsg::app::SweepRequest request;
    double from = 0;
    double to = 0;
    int steps = 0;
    bool log_spacing = false;
    std::vector<double> values;
    sweep->add_option("parameter", request.parameter, "dt, v0_x, N, I_c, C_j or z_pass")->required();
    auto *from_opt = sweep->add_option("--from", from, "First value");
    auto *to_opt = sweep->add_option("--to", to, "Last value");
    auto *steps_opt = sweep->add_option("--steps", steps, "Number of points including both ends");
    sweep->add_flag("--log", log_spacing, "Logarithmic spacing");
    auto *values_opt = sweep->add_option("--values", values, "Explicit values")->delimiter(',');
    values_opt->excludes(from_opt)->excludes(to_opt)->excludes(steps_opt);

    auto *fields_map = cli.add_subcommand("fields-map", "Tabulate dBz/dz around the axis point");
    qsg::app::FieldsMapRequest map_request;
    fields_map->add_option("--z-center", map_request.z_center, "Center height (m), default trajectory.z_pass");
    fields_map->add_option("--rho-extent", map_request.rho_extent, "Full radial width (m)");
    fields_map->add_option("--z-extent", map_request.z_extent, "Full axial width (m)");
    fields_map->add_option("--n", map_request.n, "Samples per direction");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        qsg::RunConfig config = config_path.empty() ? qsg::RunConfig{} : qsg::load_config(config_path);
        for (const auto &o : overrides) qsg::apply_override(config, o);
        if (seed) config.seed = *seed;
        if (out_dir) config.out = *out_dir;
        if (format) config.format = *format;

        qsg::app::CommandResult result;
        if (reproduce->parsed()) {
            result = qsg::app::cmd_reproduce(config);
        } else if (protocol->parsed()) {
            result = qsg::app::cmd_protocol(config);
        } else if (sweep->parsed()) {
            if (values_opt->count() > 0) {
                request.values = values;
            } else {
                if (!from_opt->count() || !to_opt->count() || !steps_opt->count()) {
                    throw qsg::Error(qsg::ErrorCode::Usage, "sweep: give --from, --to and --steps, or --values");
                }
                request.values = qsg::app::sweep_values(from, to, steps, log_spacing);
            }
            result = qsg::app::cmd_sweep(config, request);
        } else {
            result = qsg::app::cmd_fields_map(config, map_request);
        }

        write_outputs(config.out, result);
        for (const auto &w : result.warnings) std::cerr << "warning: " << w << '\n';
        std::cout << result.console;
        return result.exit_code;
    } catch (const qsg::Error &e) {
        std::cerr << "error[" << qsg::error_code_name(e.code()) << "]: " << e.what() << '\n';
        return qsg::app::exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
}
