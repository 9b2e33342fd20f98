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

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qsg/bec.hpp"
#include "qsg/fluxqubit.hpp"
#include "qsg/rng.hpp"

/// Condensate-qubit entanglement in the two-well reduction
///
///   |beta> = a_L |Psi_1>|L> + a_R |Psi_2>|R>,   |Psi_j> = |psi_j>^{(x) N}
///
/// followed by a Hadamard on the qubit and a flux measurement. N-atom
/// overlaps are carried symbolically as <psi_1|psi_2>^N.
namespace qsg::coupling {

using fluxqubit::FluxOutcome;
using fluxqubit::QubitLogicalState;

/// Decade readings of "much greater" / "much less".
struct Thresholds {
    double strong_ratio = 10.0;
    double product_ratio = 0.1;
    double budget_margin = 10.0;
    double kick_spread_fraction = 0.1;  // dP_z < fraction * dp_z
};

enum class Regime { Strong, Weak, Product };

constexpr std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Strong: return "Strong";
        case Regime::Weak: return "Weak";
        case Regime::Product: return "Product";
    }
    return "Unknown";
}

struct RegimeReport {
    double ratio = 0;  // |p_R - p_L| / dp_z
    Regime regime = Regime::Product;
    bool dP_ok = true;
    double branch_overlap = 1;  // single atom, exp(-(p_R - p_L)^2 / 4 dp_z^2)
};

RegimeReport classify_regime(const bec::KickReport &kicks, const Thresholds &thresholds = {});

/// Single-atom overlap of two Gaussian packets whose momenta differ by delta_p.
double gaussian_branch_overlap(double delta_p, double dp_z);

struct Branch {
    FluxOutcome label;
    bec::BECPacket packet;  // kicked copy; only velocity.z differs between branches
    double p_z;
};

struct EntangledState {
    Branch branch_L;
    Branch branch_R;
    QubitLogicalState qubit;
    std::int64_t N = 1;
    double phase_LR = 0;  // relative phase of |Psi_2> against |Psi_1>
    double dp_z = 0;
    bool degraded = false;  // dP_z is not below the kick-spread fraction of dp_z

    /// <psi_L|psi_R> for one atom.
    double single_atom_overlap() const;
    /// <Psi_1|Psi_2> for the N-atom branches, including phase_LR.
    std::complex<double> overlap_N() const;
    /// 1 for a product state, 2 when both branches are populated and distinct.
    int schmidt_rank() const;
    int populated_branches() const;
};

/// Builds the two-branch state from the well kicks. Throws
/// ApproximationInvalid when dP_z >= dp_z.
EntangledState entangle(const bec::BECPacket &packet, const bec::KickReport &kicks,
                        const QubitLogicalState &qubit_ground = QubitLogicalState::symmetric_ground(),
                        double phase_LR = 0.0, const Thresholds &thresholds = {});

struct TimingBudget {
    double dt = 0;
    double t_h = 0;
    double t_m = 0;
    double t_d = 0;

    double margin() const { return t_d / (dt + t_h + t_m); }
    bool satisfied(double threshold = 10.0) const { return margin() >= threshold; }
};

/// Condensate state c1 |Psi_1> + c2 |Psi_2> left after the flux readout,
/// with sign +1 for outcome L and -1 for outcome R.
struct PathEntangledBEC {
    int sign = 1;
    FluxOutcome outcome = FluxOutcome::L;
    Branch branch_1;
    Branch branch_2;
    std::complex<double> c1{0.0, 0.0};
    std::complex<double> c2{0.0, 0.0};
    std::int64_t N = 1;
    /// Norm of this outcome's component before collapse. For the symmetric
    /// ground state norm^2 = (1 +/- Re <Psi_1|Psi_2>) / 2.
    double norm = 0;
    double probability = 0;
    std::complex<double> overlap_N{1.0, 0.0};

    bool empty() const { return norm == 0.0; }
    bool has_path_superposition() const;
};

struct PostHadamardState {
    EntangledState source;
    QubitLogicalState qubit_after;  // Hadamard image of the bare qubit amplitudes
    PathEntangledBEC plus;          // attached to |L>
    PathEntangledBEC minus;         // attached to |R>
    double p_L = 0;
    double p_R = 0;
};

PostHadamardState apply_hadamard(const EntangledState &state);

/// Hadamard, flux readout and collapse. Refuses with
/// DecoherenceBudgetExceeded unless the timing margin meets the threshold.
PathEntangledBEC hadamard_and_measure(const EntangledState &state, const TimingBudget &budget, Rng &rng,
                                      const Thresholds &thresholds = {});
PathEntangledBEC hadamard_and_measure(const EntangledState &state, const TimingBudget &budget,
                                      std::uint64_t rng_seed, const Thresholds &thresholds = {});

struct MixtureComponent {
    double weight;
    PathEntangledBEC state;
};

/// Classical mixture of the +/- states obtained by tracing out the qubit.
/// Zero-weight components are dropped.
struct Mixture {
    std::vector<MixtureComponent> components;
    double total_weight() const;
};

Mixture ignore_qubit_mixture(const PostHadamardState &state);

}  // namespace qsg::coupling
