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
#include "qsg/trace.hpp"

#include <json.hpp>

namespace qsg {

namespace {

nlohmann::json complex_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::string trace_to_json(const ProtocolTrace &t) {
    using nlohmann::json;
    json j;
    j["header"] = t.header;
    j["seed"] = t.seed;
    j["qubit"] = {
        {"phi_L", t.qubit.phi_L},         {"phi_R", t.qubit.phi_R},         {"phi_a", t.qubit.phi_a},
        {"barrier", t.qubit.barrier},     {"delta_phi", t.qubit.delta_phi}, {"overlap", t.qubit.overlap},
        {"I_L", t.qubit.I_L},             {"I_R", t.qubit.I_R},             {"splitting", t.qubit.splitting},
        {"fidelity", t.qubit.fidelity},
    };
    j["kicks"] = {
        {"p_L", t.kicks.p_L},
        {"p_R", t.kicks.p_R},
        {"dp_z", t.kicks.dp_z},
        {"dP_z", t.kicks.dP_z},
        {"dt", t.kicks.dt},
        {"gradient_integral_L", t.kicks.gradient_integral_L},
        {"gradient_integral_R", t.kicks.gradient_integral_R},
        {"impulse_ok", t.kicks.impulse_ok},
    };
    j["regime"] = {
        {"name", std::string(coupling::regime_name(t.regime.regime))},
        {"ratio", t.regime.ratio},
        {"dP_ok", t.regime.dP_ok},
        {"branch_overlap", t.regime.branch_overlap},
    };
    j["budget"] = {
        {"dt", t.budget.dt}, {"t_h", t.budget.t_h}, {"t_m", t.budget.t_m},
        {"t_d", t.budget.t_d}, {"margin", t.budget_margin},
    };
    j["entangled"] = {
        {"N", t.N},
        {"single_atom_overlap", t.single_atom_overlap},
        {"schmidt_rank", t.schmidt_rank},
        {"degraded", t.degraded},
    };
    j["hadamard"] = {
        {"alpha_L", complex_json(t.qubit_after_hadamard.alpha_L)},
        {"alpha_R", complex_json(t.qubit_after_hadamard.alpha_R)},
        {"p_L", t.p_L},
        {"p_R", t.p_R},
    };
    j["measurement"] = {
        {"outcome", t.outcome == fluxqubit::FluxOutcome::L ? "L" : "R"},
        {"sign", t.sign},
        {"probability", t.outcome_probability},
        {"collapse_norm", t.collapse_norm},
        {"c1", complex_json(t.c1)},
        {"c2", complex_json(t.c2)},
    };
    j["fringes"] = {
        {"period", t.fringe_period ? json(*t.fringe_period) : json(nullptr)},
        {"nominal_period", t.nominal_period},
        {"visibility", t.visibility},
    };
    return j.dump(2) + "\n";
}

}  // namespace qsg
