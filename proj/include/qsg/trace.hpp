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

#include "qsg/bec.hpp"
#include "qsg/coupling.hpp"
#include "qsg/fluxqubit.hpp"

namespace qsg {

/// Record of one protocol run, serialized as the trace file.
struct ProtocolTrace {
    std::string header;
    std::uint64_t seed = 0;
    fluxqubit::DoubleWellSummary qubit;
    bec::KickReport kicks;
    coupling::RegimeReport regime;
    coupling::TimingBudget budget;
    double budget_margin = 0;
    std::int64_t N = 1;
    double single_atom_overlap = 0;
    int schmidt_rank = 0;
    bool degraded = false;
    fluxqubit::QubitLogicalState qubit_after_hadamard;
    double p_L = 0;
    double p_R = 0;
    fluxqubit::FluxOutcome outcome = fluxqubit::FluxOutcome::L;
    int sign = 1;
    double outcome_probability = 0;
    double collapse_norm = 0;
    std::complex<double> c1{0.0, 0.0};
    std::complex<double> c2{0.0, 0.0};
    std::optional<double> fringe_period;
    double nominal_period = 0;
    double visibility = 0;
};

std::string trace_to_json(const ProtocolTrace &trace);

}  // namespace qsg
