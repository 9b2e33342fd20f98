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
#include "qsg/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "qsg/error.hpp"

#ifndef QSG_VERSION
#define QSG_VERSION "0.0.0"
#endif

namespace qsg {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    const std::string s(text);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw Error(ErrorCode::Config, std::string(key) + ": expected a number, got '" + s + "'");
    }
    return v;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view text) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        // Accept integral values written in floating notation, e.g. 1e5.
        const double d = parse_double(key, text);
        if (d != static_cast<double>(static_cast<Int>(d))) {
            throw Error(ErrorCode::Config, std::string(key) + ": expected an integer, got '" + std::string(text) + "'");
        }
        return static_cast<Int>(d);
    }
    return v;
}

struct Field {
    std::string_view key;
    std::function<std::string(const RunConfig &)> get;
    std::function<void(RunConfig &, std::string_view)> set;
};

#define QSG_DOUBLE(KEY, MEMBER)                                                                      Field {                                                                                              KEY, [](const RunConfig &c) { return format_double(c.MEMBER); },                                     [](RunConfig &c, std::string_view v) { c.MEMBER = parse_double(KEY, v); }                 }
#define QSG_INT(KEY, MEMBER, TYPE)                                                                   Field {                                                                                              KEY, [](const RunConfig &c) { return std::to_string(c.MEMBER); },                                    [](RunConfig &c, std::string_view v) { c.MEMBER = parse_int<TYPE>(KEY, v); }              }

const std::vector<Field> &fields_table() {
    static const std::vector<Field> table = {
        QSG_DOUBLE("loop.r_inner", r_inner),
        QSG_DOUBLE("loop.r_outer", r_outer),
        QSG_DOUBLE("loop.thickness", thickness),
        QSG_DOUBLE("qubit.L", L),
        QSG_DOUBLE("qubit.C_j", C_j),
        Field{"qubit.I_c",
              [](const RunConfig &c) { return c.I_c ? format_double(*c.I_c) : std::string("auto"); },
              [](RunConfig &c, std::string_view v) {
                  if (v == "auto") {
                      c.I_c.reset();
                  } else {
                      c.I_c = parse_double("qubit.I_c", v);
                  }
              }},
        QSG_DOUBLE("qubit.phi_a", phi_a),
        QSG_INT("qubit.grid_n", grid_n, int),
        QSG_INT("bec.N", N, std::int64_t),
        QSG_DOUBLE("bec.sigma_x", sigma_x),
        QSG_DOUBLE("bec.sigma_y", sigma_y),
        QSG_DOUBLE("bec.sigma_z", sigma_z),
        QSG_INT("bec.F", F, int),
        QSG_INT("bec.m_F", m_F, int),
        QSG_DOUBLE("bec.g_F", g_F),
        QSG_DOUBLE("bec.mass", mass),
        QSG_DOUBLE("trajectory.v0_x", v0_x),
        QSG_DOUBLE("trajectory.z_pass", z_pass),
        QSG_DOUBLE("trajectory.window", window),
        QSG_INT("trajectory.steps", steps, int),
        QSG_DOUBLE("trajectory.g", g),
        QSG_DOUBLE("timing.t_h", t_h),
        QSG_DOUBLE("timing.t_m", t_m),
        QSG_DOUBLE("timing.t_d", t_d),
        QSG_DOUBLE("thresholds.strong_ratio", strong_ratio),
        QSG_DOUBLE("thresholds.product_ratio", product_ratio),
        QSG_DOUBLE("thresholds.budget_margin", budget_margin),
        QSG_DOUBLE("thresholds.kick_spread_fraction", kick_spread_fraction),
        QSG_DOUBLE("thresholds.backaction_negligible", backaction_negligible),
        QSG_DOUBLE("thresholds.gradient_fraction", gradient_fraction),
        QSG_INT("run.seed", seed, std::uint64_t),
        Field{"run.out", [](const RunConfig &c) { return c.out; },
              [](RunConfig &c, std::string_view v) { c.out = std::string(v); }},
        Field{"run.format", [](const RunConfig &c) { return c.format; },
              [](RunConfig &c, std::string_view v) {
                  if (v != "csv" && v != "json") throw Error(ErrorCode::Config, "run.format: expected csv or json");
                  c.format = std::string(v);
              }},
    };
    return table;
}

#undef QSG_DOUBLE
#undef QSG_INT

const Field &find_field(std::string_view key) {
    for (const auto &f : fields_table()) {
        if (f.key == key) return f;
    }
    throw Error(ErrorCode::Config, "unknown key '" + std::string(key) + "'");
}

std::string serialize_sections(const RunConfig &config, bool include_run) {
    std::ostringstream out;
    std::string_view current;
    for (const auto &f : fields_table()) {
        const auto dot = f.key.find('.');
        const std::string_view section = f.key.substr(0, dot);
        if (!include_run && section == "run") continue;
        if (section != current) {
            if (!current.empty()) out << '\n';
            out << '[' << section << "]\n";
            current = section;
        }
        out << f.key.substr(dot + 1) << " = " << f.get(config) << '\n';
    }
    return out.str();
}

}  // namespace

fluxqubit::FluxQubitParams RunConfig::qubit_params() const {
    fluxqubit::FluxQubitParams p;
    p.L = L;
    p.C_j = C_j;
    p.I_c = I_c ? *I_c : kPhysical.Phi0 / (4.0 * L);
    p.Phi_a = phi_a * kPhysical.Phi0;
    return p;
}

fluxqubit::FluxGrid RunConfig::flux_grid() const { return fluxqubit::FluxGrid::centered(qubit_params(), grid_n); }

fields::LoopGeometry RunConfig::loop() const { return fields::LoopGeometry::from_dimensions(r_inner, r_outer, thickness); }

bec::PacketConfig RunConfig::packet_config() const {
    bec::PacketConfig p;
    p.N = N;
    p.sigma_x = sigma_x;
    p.sigma_y = sigma_y;
    p.sigma_z = sigma_z;
    p.spin = spin();
    p.mass = mass;
    return p;
}

coupling::Thresholds RunConfig::thresholds() const {
    return {strong_ratio, product_ratio, budget_margin, kick_spread_fraction};
}

bec::KickOptions RunConfig::kick_options() const { return {gradient_fraction, true}; }

void set_value(RunConfig &config, std::string_view key, std::string_view value) {
    find_field(key).set(config, trim(value));
}

std::string get_value(const RunConfig &config, std::string_view key) { return find_field(key).get(config); }

void apply_override(RunConfig &config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw Error(ErrorCode::Config, "override '" + std::string(assignment) + "' is not of the form key=value");
    }
    set_value(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

RunConfig parse_config(std::string_view text, std::string_view source_name) {
    RunConfig config;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto where = std::string(source_name) + ":" + std::to_string(line_no) + ": ";
        try {
            if (line.front() == '[') {
                if (line.back() != ']') throw Error(ErrorCode::Config, "unterminated section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) throw Error(ErrorCode::Config, "expected key = value");
            const std::string key = (section.empty() ? "" : section + ".") + std::string(trim(line.substr(0, eq)));
            set_value(config, key, line.substr(eq + 1));
        } catch (const Error &e) {
            throw Error(ErrorCode::Config, where + e.what());
        }
    }
    return config;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Config, path + ": cannot open config file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

std::string serialize_config(const RunConfig &config) { return serialize_sections(config, true); }

std::string config_hash(const RunConfig &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_sections(config, false)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_header(const RunConfig &config) {
    return std::string("# qsg-sim v") + QSG_VERSION + " config=" + config_hash(config) +
           " seed=" + std::to_string(config.seed);
}

bool operator==(const RunConfig &a, const RunConfig &b) { return serialize_config(a) == serialize_config(b); }

}  // namespace qsg
