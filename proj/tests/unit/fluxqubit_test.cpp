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
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "qsg/error.hpp"
#include "qsg/fluxqubit.hpp"

using namespace qsg;
using namespace qsg::fluxqubit;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Usage;
}

}  // namespace

TEST(fluxqubit, defaults_place_minima_at_quarter_flux) {
    const auto p = FluxQubitParams::reference_defaults();
    const double phi0 = kPhysical.Phi0;
    EXPECT_NEAR(p.I_c, phi0 / (4.0 * p.L), 1e-18);
    EXPECT_NEAR(p.beta(), std::numbers::pi / 2, 1e-12);
    const auto m = find_minima(p);
    EXPECT_NEAR(m.phi_L / phi0, 0.25, 1e-10);
    EXPECT_NEAR(m.phi_R / phi0, 0.75, 1e-10);
    EXPECT_NEAR(m.barrier, 5.669424647403586e-21, 1e-30);
    EXPECT_NEAR(persistent_current(p, m.phi_L), -8.0273053123522101e-5, 1e-16);
    EXPECT_NEAR(persistent_current(p, m.phi_R), 8.0273053123522101e-5, 1e-16);
}

TEST(fluxqubit, property_minima_are_stationary_and_mirror) {
    oracle::Gen gen(17);
    const double phi0 = kPhysical.Phi0;
    for (int i = 0; i < 25; ++i) {
        auto p = FluxQubitParams::reference_defaults();
        p.L = gen.uniform(3e-12, 12e-12);
        p.I_c = gen.uniform(0.2, 2.0) * phi0 / (p.L * 2.0 * std::numbers::pi) + phi0 / (2.0 * std::numbers::pi * p.L);
        const auto m = find_minima(p);
        EXPECT_LT(m.phi_L, 0.5 * phi0);
        EXPECT_GT(m.phi_R, 0.5 * phi0);
        EXPECT_NEAR(m.phi_L + m.phi_R, phi0, 1e-9 * phi0);
        EXPECT_NEAR(potential_slope(p, m.phi_L) * p.L / phi0, 0.0, 1e-8);
        EXPECT_GT(potential_curvature(p, m.phi_L), 0.0);
        EXPECT_GT(m.barrier, 0.0);
        EXPECT_NEAR(persistent_current(p, m.phi_L), -persistent_current(p, m.phi_R), 1e-9 * p.I_c);
    }
}

TEST(fluxqubit, find_minima_errors) {
    auto p = FluxQubitParams::reference_defaults();
    p.I_c = 0.5 * kPhysical.Phi0 / (2.0 * std::numbers::pi * p.L);
    EXPECT_EQ(code_of([&] { find_minima(p); }), ErrorCode::NoDoubleWell);
    p = FluxQubitParams::reference_defaults();
    p.Phi_a = 0.3 * kPhysical.Phi0;
    EXPECT_EQ(code_of([&] { find_minima(p); }), ErrorCode::InvalidArgument);
    p = FluxQubitParams::reference_defaults();
    p.C_j = 0;
    EXPECT_EQ(code_of([&] { find_minima(p); }), ErrorCode::InvalidArgument);
}

TEST(fluxqubit, harmonic_limit_ladder) {
    auto p = FluxQubitParams::reference_defaults();
    p.I_c = 0.0;
    const auto states = eigenstates(p, FluxGrid::centered(p, 4096), 5);
    const double hw = kPhysical.hbar / std::sqrt(p.L * p.C_j);
    for (int n = 0; n < 5; ++n) {
        EXPECT_NEAR(states[n].energy / (hw * (n + 0.5)), 1.0, 1e-3) << n;
        EXPECT_NEAR(states[n].wavefunction.norm_squared(), 1.0, 1e-10);
    }
}

TEST(fluxqubit, ground_energy_matches_reference_solver) {
    // Frozen from an independent parity-block tridiagonal solve.
    const auto p = FluxQubitParams::reference_defaults();
    const auto states = eigenstates(p, FluxGrid::centered(p, 4096), 2);
    EXPECT_NEAR(states[0].energy, 4.781428534091416e-20, 1e-12 * 4.78e-20);
    EXPECT_GT(states[1].energy, states[0].energy);
    EXPECT_NEAR(std::abs(states[0].wavefunction.inner(states[1].wavefunction)), 0.0, 1e-10);
}

TEST(fluxqubit, grid_doubling_is_stable) {
    const auto p = FluxQubitParams::reference_defaults();
    for (int n : {2048, 4096}) {
        const auto a = eigenstates(p, FluxGrid::centered(p, n), 2);
        const auto b = eigenstates(p, FluxGrid::centered(p, 2 * n), 2);
        for (int k = 0; k < 2; ++k) EXPECT_LT(std::abs(b[k].energy / a[k].energy - 1.0), 1e-6) << n;
    }
}

TEST(fluxqubit, eigenstates_orthonormal) {
    const auto p = FluxQubitParams::reference_defaults();
    const auto s = eigenstates(p, FluxGrid::centered(p, 4096), 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_NEAR(std::abs(s[i].wavefunction.inner(s[j].wavefunction)), i == j ? 1.0 : 0.0, 1e-8);
        }
    }
}

TEST(fluxqubit, ground_state_follows_bias) {
    auto p = FluxQubitParams::reference_defaults();
    const double phi0 = kPhysical.Phi0;
    const auto sym = eigenstates(p, FluxGrid::centered(p, 4096), 2);
    EXPECT_NEAR(sym[0].wavefunction.mean_flux(), p.Phi_a, 1e-8 * phi0);
    // At 0.51 Phi0 the right well is deeper.
    p.Phi_a = 0.51 * phi0;
    const auto tilted = eigenstates(p, FluxGrid::centered(p, 4096), 2);
    EXPECT_GT(tilted[0].wavefunction.mean_flux(), p.Phi_a);
    p.Phi_a = 0.49 * phi0;
    EXPECT_LT(eigenstates(p, FluxGrid::centered(p, 4096), 2)[0].wavefunction.mean_flux(), p.Phi_a);
}

TEST(fluxqubit, two_gaussian_summary_defaults) {
    const auto p = FluxQubitParams::reference_defaults();
    const auto s = two_gaussian_summary(p, FluxGrid::centered(p, 4096));
    EXPECT_NEAR(s.delta_phi, 6.504958789504366e-17, 1e-27);
    EXPECT_NEAR(s.delta_phi / (s.phi_R - s.phi_L), 0.06291568149290913, 1e-12);
    EXPECT_NEAR(s.fidelity, 0.9928535356884238, 1e-9);
    EXPECT_GT(s.splitting, 0.0);
    EXPECT_LT(s.overlap, 1e-20);
}

TEST(fluxqubit, property_splitting_decreases_with_critical_current) {
    // Small C_j keeps the tunnel splitting resolvable in double precision.
    auto p = FluxQubitParams::reference_defaults();
    p.C_j = 0.05e-15;
    const double base = p.I_c;
    double previous = std::numeric_limits<double>::infinity();
    for (double f : {1.0, 1.1, 1.2, 1.35, 1.5}) {
        p.I_c = f * base;
        const auto s = eigenstates(p, FluxGrid::centered(p, 4096), 2);
        const double split = s[1].energy - s[0].energy;
        EXPECT_GT(split, 0.0);
        EXPECT_LT(split, previous) << f;
        previous = split;
    }
}

TEST(fluxqubit, well_states_localize) {
    const auto p = FluxQubitParams::reference_defaults();
    const auto states = eigenstates(p, FluxGrid::centered(p, 4096), 2);
    const auto wells = well_states(states);
    EXPECT_NEAR(wells.left.mean_flux() / kPhysical.Phi0, 0.25, 0.01);
    EXPECT_NEAR(wells.right.mean_flux() / kPhysical.Phi0, 0.75, 0.01);
    EXPECT_NEAR(wells.left.norm_squared(), 1.0, 1e-9);
}

TEST(fluxqubit, narrow_grid_rejected) {
    const auto p = FluxQubitParams::reference_defaults();
    FluxGrid g{0.1 * kPhysical.Phi0, 0.9 * kPhysical.Phi0, 1024};
    EXPECT_EQ(code_of([&] { eigenstates(p, g, 2); }), ErrorCode::GridTooNarrow);
    FluxGrid tiny = FluxGrid::centered(p, 64);
    EXPECT_EQ(code_of([&] { eigenstates(p, tiny, 2); }), ErrorCode::InvalidArgument);
}

TEST(fluxqubit, hadamard_is_involution) {
    oracle::Gen gen(1);
    for (int i = 0; i < 20; ++i) {
        const std::complex<double> a(gen.uniform(-1, 1), gen.uniform(-1, 1));
        const std::complex<double> b(gen.uniform(-1, 1), gen.uniform(-1, 1));
        const QubitLogicalState s{a, b};
        const auto hh = hadamard(hadamard(s));
        EXPECT_NEAR(std::abs(hh.alpha_L - a), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(hh.alpha_R - b), 0.0, 1e-14);
        EXPECT_NEAR(hadamard(s).norm_squared(), s.norm_squared(), 1e-13);
    }
    const auto h = hadamard(QubitLogicalState::symmetric_ground());
    EXPECT_NEAR(std::abs(h.alpha_L), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(h.alpha_R), 0.0, 1e-15);
}

TEST(fluxqubit, measurement_frequencies_follow_born_rule) {
    Rng rng(42);
    const QubitLogicalState s{std::sqrt(0.3), std::sqrt(0.7)};
    int left = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        const auto m = measure_flux(s, rng);
        if (m.outcome == FluxOutcome::L) ++left;
        EXPECT_NEAR(m.p_L, 0.3, 1e-12);
    }
    EXPECT_NEAR(static_cast<double>(left) / trials, 0.3, 0.005);
    EXPECT_EQ(measure_flux(s, 7).outcome, measure_flux(s, 7).outcome);
    EXPECT_EQ(measure_flux(QubitLogicalState{1.0, 0.0}, 3).outcome, FluxOutcome::L);
}
