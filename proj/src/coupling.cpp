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
#include "qsg/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsg/error.hpp"

namespace qsg::coupling {

namespace {

Branch kicked_branch(const bec::BECPacket &packet, FluxOutcome label, double p_z) {
    Branch b{label, packet, p_z};
    b.packet.velocity.z() += p_z / packet.mass_atom;
    return b;
}

PathEntangledBEC collapse(const EntangledState &s, int sign) {
    const std::complex<double> a_L = s.qubit.alpha_L;
    const std::complex<double> a_R = static_cast<double>(sign) * s.qubit.alpha_R;
    const std::complex<double> overlap = s.overlap_N();

    PathEntangledBEC out;
    out.sign = sign;
    out.outcome = sign > 0 ? FluxOutcome::L : FluxOutcome::R;
    out.branch_1 = s.branch_L;
    out.branch_2 = s.branch_R;
    out.N = s.N;
    out.overlap_N = overlap;

    const double norm2 = 0.5 * (std::norm(a_L) + std::norm(a_R) + 2.0 * std::real(std::conj(a_L) * a_R * overlap));
    out.probability = std::max(norm2, 0.0);
    out.norm = std::sqrt(out.probability);
    if (out.norm > 1e-300) {
        const double scale = 1.0 / (std::numbers::sqrt2 * out.norm);
        out.c1 = a_L * scale;
        out.c2 = a_R * scale;
    } else {
        out.norm = 0.0;
        out.probability = 0.0;
    }
    return out;
}

}  // namespace

double gaussian_branch_overlap(double delta_p, double dp_z) {
    return std::exp(-delta_p * delta_p / (4.0 * dp_z * dp_z));
}

RegimeReport classify_regime(const bec::KickReport &kicks, const Thresholds &thresholds) {
    if (!(kicks.dp_z > 0)) throw Error(ErrorCode::InvalidArgument, "classify_regime: dp_z must be positive");
    RegimeReport r;
    const double delta = kicks.p_R - kicks.p_L;
    r.ratio = std::abs(delta) / kicks.dp_z;
    if (r.ratio >= thresholds.strong_ratio) {
        r.regime = Regime::Strong;
    } else if (r.ratio <= thresholds.product_ratio) {
        r.regime = Regime::Product;
    } else {
        r.regime = Regime::Weak;
    }
    r.dP_ok = kicks.dP_z < thresholds.kick_spread_fraction * kicks.dp_z;
    r.branch_overlap = gaussian_branch_overlap(delta, kicks.dp_z);
    return r;
}

double EntangledState::single_atom_overlap() const {
    return gaussian_branch_overlap(branch_R.p_z - branch_L.p_z, dp_z);
}

std::complex<double> EntangledState::overlap_N() const {
    const double delta = branch_R.p_z - branch_L.p_z;
    const double log_overlap = -delta * delta / (4.0 * dp_z * dp_z);
    return std::polar(std::exp(static_cast<double>(N) * log_overlap), phase_LR);
}

int EntangledState::populated_branches() const {
    return (std::abs(qubit.alpha_L) > 0.0 ? 1 : 0) + (std::abs(qubit.alpha_R) > 0.0 ? 1 : 0);
}

int EntangledState::schmidt_rank() const {
    if (populated_branches() < 2) return 1;
    return std::abs(overlap_N()) >= 1.0 - 1e-15 ? 1 : 2;
}

EntangledState entangle(const bec::BECPacket &packet, const bec::KickReport &kicks,
                        const QubitLogicalState &qubit_ground, double phase_LR, const Thresholds &thresholds) {
    if (std::abs(qubit_ground.norm_squared() - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "entangle: qubit state must be normalized");
    }
    if (kicks.dP_z >= kicks.dp_z) {
        throw Error(ErrorCode::ApproximationInvalid,
                    "entangle: kick spread dP_z is not small against the packet momentum width dp_z");
    }
    EntangledState s;
    s.branch_L = kicked_branch(packet, FluxOutcome::L, kicks.p_L);
    s.branch_R = kicked_branch(packet, FluxOutcome::R, kicks.p_R);
    s.qubit = qubit_ground;
    s.N = packet.N;
    s.phase_LR = phase_LR;
    s.dp_z = kicks.dp_z;
    s.degraded = kicks.dP_z >= thresholds.kick_spread_fraction * kicks.dp_z;
    return s;
}

bool PathEntangledBEC::has_path_superposition() const {
    return !empty() && std::abs(c1) > 1e-12 && std::abs(c2) > 1e-12 && std::abs(overlap_N) < 1.0 - 1e-15;
}

PostHadamardState apply_hadamard(const EntangledState &state) {
    PostHadamardState post;
    post.source = state;
    post.qubit_after = fluxqubit::hadamard(state.qubit);
    post.plus = collapse(state, +1);
    post.minus = collapse(state, -1);
    const double total = post.plus.probability + post.minus.probability;
    post.p_L = post.plus.probability / total;
    post.p_R = post.minus.probability / total;
    post.plus.probability = post.p_L;
    post.minus.probability = post.p_R;
    return post;
}

PathEntangledBEC hadamard_and_measure(const EntangledState &state, const TimingBudget &budget, Rng &rng,
                                      const Thresholds &thresholds) {
    if (!budget.satisfied(thresholds.budget_margin)) {
        throw Error(ErrorCode::DecoherenceBudgetExceeded,
                    "hadamard_and_measure: dt + t_h + t_m is not small against t_d (margin " +
                        std::to_string(budget.margin()) + ")");
    }
    const PostHadamardState post = apply_hadamard(state);
    return rng.uniform() < post.p_L ? post.plus : post.minus;
}

PathEntangledBEC hadamard_and_measure(const EntangledState &state, const TimingBudget &budget,
                                      std::uint64_t rng_seed, const Thresholds &thresholds) {
    Rng rng(rng_seed);
    return hadamard_and_measure(state, budget, rng, thresholds);
}

double Mixture::total_weight() const {
    double total = 0.0;
    for (const auto &c : components) total += c.weight;
    return total;
}

Mixture ignore_qubit_mixture(const PostHadamardState &state) {
    Mixture m;
    if (state.p_L > 0.0) m.components.push_back({state.p_L, state.plus});
    if (state.p_R > 0.0) m.components.push_back({state.p_R, state.minus});
    return m;
}

}  // namespace qsg::coupling
