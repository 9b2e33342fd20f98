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
// Worked single-point cases for each module, with expected values computed
// in the test from closed forms.

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "qsg/error.hpp"
#include "qsg/fields.hpp"
#include "qsg/interference.hpp"
#include "test_setup.hpp"

using namespace qsg;

namespace {

constexpr double kR = 2.25e-6;
constexpr double kI = 80.3e-6;
const coupling::TimingBudget kRelaxed{1e-6, 1e-7, 1e-7, 1e-3};

}  // namespace

TEST(field_cases, loop_center) {
    EXPECT_EQ(fields::onaxis_Bz(0.0, kR, 1e-6), 0.0);
    EXPECT_NEAR(fields::onaxis_Bz(kI, kR, 0.0), 2.243e-5, 0.001 * 2.243e-5);
    EXPECT_EQ(fields::onaxis_Bz(-kI, kR, 0.0), -fields::onaxis_Bz(kI, kR, 0.0));
    EXPECT_EQ(fields::onaxis_dBz_dz(kI, kR, 0.0), 0.0);
    EXPECT_NEAR(fields::onaxis_dBz_dz(kI, kR, 1.25e-6), -8.48, 0.01 * 8.48);
    EXPECT_NEAR(fields::onaxis_gradient_extremum_z(kR), 1.125e-6, 0.005 * 1.125e-6);
}

TEST(field_cases, off_axis_point) {
    const auto f = fields::loop_field(kI, kR, 1.0e-6, 1.25e-6);
    const auto ref = oracle::biot_savart(kI, kR, 1.0e-6, 1.25e-6, 2048);
    EXPECT_NEAR(f.B_rho, ref.B_rho, 1e-6 * std::abs(ref.B_rho));
    EXPECT_NEAR(f.B_z, ref.B_z, 1e-6 * std::abs(ref.B_z));
    const auto axis = fields::loop_field(kI, kR, 0.0, 1.25e-6);
    EXPECT_EQ(axis.B_rho, 0.0);
}

TEST(field_cases, flatness_map_grid) {
    const auto reported = fields::gradient_flatness_map(kI, kR, 1.25e-6, 2e-6, 1e-6, 21);
    EXPECT_GT(reported.max_relative_deviation, 0.0);
    EXPECT_LT(reported.max_relative_deviation, 1.0);
    const auto zero = fields::gradient_flatness_map(0.0, kR, 1.25e-6, 2e-6, 1e-6, 5);
    EXPECT_EQ(zero.dBz_dz.cwiseAbs().maxCoeff(), 0.0);
    const auto small = fields::gradient_flatness_map(kI, kR, 1.25e-6, 2e-6, 1e-6, 3);
    EXPECT_EQ(small.dBz_dz.size(), 9);
    EXPECT_NEAR(small.rho(2), 1e-6, 1e-18);
    EXPECT_NEAR(small.z(0), 0.75e-6, 1e-18);
    EXPECT_NEAR(small.z(2), 1.75e-6, 1e-18);
}

TEST(field_cases, inductance_grows_with_radius) {
    EXPECT_GT(fields::loop_self_inductance(4.5e-6, 3.3525e-7), fields::loop_self_inductance(2.25e-6, 3.3525e-7));
    EXPECT_NEAR(fields::loop_self_inductance(2.25e-6, 0.25e-6), 6.44e-12, 0.02 * 6.44e-12);
}

TEST(field_cases, dipole) {
    const SpinState spin{2, 2, 0.5};
    const double z0 = 1.25e-6;
    EXPECT_NEAR(fields::dipole_Bz(spin, z0, z0, z0), 0.0, 1e-20);
    const double x = 1e-6;
    const double r = std::hypot(x, z0);
    const double direct =
        kPhysical.mu0 / (4 * std::numbers::pi) * kPhysical.mu_B * (3 * z0 * z0 / std::pow(r, 5) - 1 / std::pow(r, 3));
    EXPECT_NEAR(fields::dipole_Bz(spin, x, 0.0, z0), direct, 1e-12 * std::abs(direct));
    const SpinState zero{2, 0, 0.5};
    EXPECT_EQ(fields::dipole_Bz(zero, x, 0.0, z0), 0.0);
    EXPECT_EQ(fields::dipole_flux_linked(zero, kR, z0), 0.0);
    EXPECT_NEAR(fields::dipole_flux_linked(spin, kR, z0), 1.73e-24, 0.01 * 1.73e-24);
    EXPECT_LT(fields::dipole_flux_linked(spin, kR, 1.0), 1e-35);
}

TEST(qubit_cases, potential_values) {
    using namespace fluxqubit;
    auto p = FluxQubitParams::reference_defaults();
    const double phi0 = kPhysical.Phi0;
    const double quarter = 0.25 * phi0;
    const double harmonic = quarter * quarter / (2 * p.L);
    EXPECT_NEAR(harmonic, 2.076e-20, 1e-3 * 2.076e-20);
    EXPECT_NEAR(p.E_j(), 2.643e-20, 1e-3 * 2.643e-20);
    EXPECT_NEAR(potential(p, quarter), harmonic + p.E_j(), 1e-12 * (harmonic + p.E_j()));
    EXPECT_NEAR(find_minima(p).barrier, p.E_j() - harmonic, 1e-9 * 5.7e-21);
    EXPECT_NEAR(find_minima(p).barrier, 5.7e-21, 0.01 * 5.7e-21);
    oracle::Gen gen(6);
    for (int i = 0; i < 20; ++i) {
        const double d = gen.uniform(0, phi0);
        EXPECT_NEAR(potential(p, p.Phi_a + d), potential(p, p.Phi_a - d), 1e-12 * potential(p, p.Phi_a + d));
    }
    EXPECT_EQ(persistent_current(p, p.Phi_a), 0.0);
    p.I_c = 0;
    EXPECT_EQ(potential(p, p.Phi_a), 0.0);
}

TEST(qubit_cases, parity_of_low_states) {
    using namespace fluxqubit;
    const auto p = FluxQubitParams::reference_defaults();
    const auto s = eigenstates(p, FluxGrid::centered(p, 4096), 2);
    const Eigen::VectorXcd &g = s[0].wavefunction.amplitudes;
    const Eigen::VectorXcd &e = s[1].wavefunction.amplitudes;
    EXPECT_LT((g - g.reverse()).cwiseAbs().maxCoeff(), 1e-9 * g.cwiseAbs().maxCoeff());
    EXPECT_LT((e + e.reverse()).cwiseAbs().maxCoeff(), 1e-9 * e.cwiseAbs().maxCoeff());
}

TEST(qubit_cases, hadamard_and_measurement) {
    using namespace fluxqubit;
    const double s = std::numbers::sqrt2 / 2;
    auto h = hadamard({1.0, 0.0});
    EXPECT_NEAR(h.alpha_L.real(), s, 1e-15);
    EXPECT_NEAR(h.alpha_R.real(), s, 1e-15);
    h = hadamard({s, s});
    EXPECT_NEAR(h.alpha_L.real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(h.alpha_R), 0.0, 1e-15);
    h = hadamard({0.0, 1.0});
    EXPECT_NEAR(h.alpha_L.real(), s, 1e-15);
    EXPECT_NEAR(h.alpha_R.real(), -s, 1e-15);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = measure_flux({1.0, 0.0}, seed);
        EXPECT_EQ(m.outcome, FluxOutcome::L);
        EXPECT_EQ(m.probability, 1.0);
    }
    EXPECT_NEAR(measure_flux({0.6, 0.8}, 1).p_R, 0.64, 1e-15);
    Rng rng(2026);
    int left = 0;
    for (int i = 0; i < 100000; ++i) left += measure_flux({s, s}, rng).outcome == FluxOutcome::L;
    EXPECT_NEAR(left / 1e5, 0.5, 0.01);
}

TEST(bec_cases, packet_and_trajectory) {
    bec::PacketConfig cfg;
    EXPECT_NEAR(bec::make_packet(cfg).dp_z, 1.0546e-28, 1e-4 * 1.0546e-28);
    cfg.sigma_z = 2e-6;
    EXPECT_NEAR(bec::make_packet(cfg).dp_z, 0.5 * kPhysical.hbar / 1e-6, 1e-40);
    const auto p = bec::make_packet();
    const auto fall = bec::freefall_trajectory(p, 1.25e-6, 0.0, 1e-3, 11, 9.81);
    EXPECT_NEAR(fall.x(10), 4.905e-6, 1e-15);
    EXPECT_EQ(fall.z, 1.25e-6);
    const auto line = bec::freefall_trajectory(p, 1.25e-6, 4.5, 1e-3, 11, 0.0);
    for (int i = 0; i < 11; ++i) EXPECT_NEAR(line.x(i), 4.5 * line.t(i), 1e-18);
}

TEST(bec_cases, kicks) {
    const auto p = bec::make_packet();
    auto idle = test::default_summary();
    idle.I_L = idle.I_R = 0.0;
    const fields::LoopGeometry loop = fields::LoopGeometry::from_dimensions(2e-6, 2.5e-6, 1e-6);
    const auto zero = bec::kick_integral(p, bec::crossing_trajectory(p, 1.25e-6, 4.5, 30e-6, 801), idle, loop, 30e-6);
    EXPECT_EQ(zero.p_L, 0.0);
    EXPECT_EQ(zero.p_R, 0.0);

    const auto threshold = bec::idealized_kicks(p, test::default_summary(), 8.18, 0.70e-6);
    EXPECT_NEAR(std::abs(threshold.p_L - threshold.p_R) / p.dp_z, 1.0, 0.01);
    EXPECT_EQ(coupling::classify_regime(threshold).regime, coupling::Regime::Weak);

    const auto branches = bec::semiclassical_split(p, {{1, std::sqrt(0.5)}, {0, std::sqrt(0.5)}}, 8.18, 2e-6);
    EXPECT_NEAR(branches[0].p_z - branches[1].p_z, -7.59e-29, 0.01e-29);
    EXPECT_EQ(branches[1].p_z, 0.0);
    const auto flipped = bec::semiclassical_split(p, {{1, 1.0}}, -8.18, 2e-6);
    EXPECT_EQ(flipped[0].p_z, -branches[0].p_z);
}

TEST(coupling_cases, degenerate_and_budget) {
    const auto same = test::entangled_with_ratio(100, 0.0);
    EXPECT_EQ(same.schmidt_rank(), 1);
    bec::KickReport zero;
    zero.dp_z = 1.0;
    EXPECT_EQ(coupling::classify_regime(zero).regime, coupling::Regime::Product);
    EXPECT_EQ(coupling::classify_regime(zero).ratio, 0.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto pe = coupling::hadamard_and_measure(same, kRelaxed, seed);
        EXPECT_EQ(pe.outcome, fluxqubit::FluxOutcome::L);
    }
    EXPECT_TRUE(coupling::apply_hadamard(same).minus.empty());

    const auto single = test::entangled_with_ratio(100, 3.0, fluxqubit::QubitLogicalState{1.0, 0.0});
    EXPECT_EQ(single.populated_branches(), 1);

    const coupling::TimingBudget b{2e-6, 0.1e-6, 0.1e-6, 10e-6};
    EXPECT_NEAR(b.margin(), 10.0 / 2.2, 1e-12);
    EXPECT_THROW(coupling::hadamard_and_measure(test::entangled_with_ratio(100, 3.0), b, 1), Error);
}

TEST(coupling_cases, mixture_weights) {
    const auto m = coupling::ignore_qubit_mixture(coupling::apply_hadamard(test::entangled_with_ratio(100000, 3.0)));
    ASSERT_EQ(m.components.size(), 2u);
    EXPECT_NEAR(m.components[0].weight, 0.5, 1e-12);
    EXPECT_NEAR(m.components[1].weight, 0.5, 1e-12);
}

TEST(interference_cases, wavelength_and_period) {
    EXPECT_NEAR(interference::debroglie_wavelength(kPhysical.m_Rb87, 4.5), 1.0204e-9, 0.001 * 1.0204e-9);
    EXPECT_NEAR(interference::debroglie_wavelength(kPhysical.m_Rb87, 9.0),
                0.5 * interference::debroglie_wavelength(kPhysical.m_Rb87, 4.5), 1e-24);
    oracle::Gen gen(3);
    for (int i = 0; i < 20; ++i) {
        const double l = interference::debroglie_wavelength(gen.log_uniform(1e-30, 1e-20), gen.log_uniform(1e-6, 1e6));
        EXPECT_TRUE(std::isfinite(l) && l > 0);
    }

    coupling::PathEntangledBEC pe;
    pe.c1 = std::numbers::sqrt2 / 2;
    pe.c2 = std::numbers::sqrt2 / 2;
    pe.norm = 1.0;
    pe.N = 1;
    const double dp = 1.52e-27;
    const auto one = interference::recombined_pattern(pe, dp, 1e-6, interference::suggested_points(1, dp, 1e-6));
    ASSERT_TRUE(one.period.has_value());
    EXPECT_NEAR(*one.period, 4.36e-7, 0.01 * 4.36e-7);
    pe.N = 10;
    const auto ten = interference::recombined_pattern(pe, dp, 1e-6, interference::suggested_points(10, dp, 1e-6));
    ASSERT_TRUE(ten.period.has_value());
    EXPECT_NEAR(*ten.period, 4.36e-8, 0.01 * 4.36e-8);
    EXPECT_NEAR(*ten.period / *one.period, 0.1, 1e-3);
}

TEST(interference_cases, dark_center_and_mixtures) {
    coupling::PathEntangledBEC minus;
    minus.c1 = std::numbers::sqrt2 / 2;
    minus.c2 = -std::numbers::sqrt2 / 2;
    minus.norm = 1.0;
    minus.N = 1;
    minus.sign = -1;
    const double dp = 6 * kPhysical.hbar / 1e-6;
    const auto p = interference::recombined_pattern(minus, dp, 1e-6, 2049);
    EXPECT_NEAR(p.intensity(1024), 0.0, 1e-12 * p.intensity.maxCoeff());

    coupling::PathEntangledBEC plus = minus;
    plus.c2 = -plus.c2;
    plus.sign = 1;
    coupling::Mixture mix{{{0.5, plus}, {0.5, minus}}};
    EXPECT_LT(interference::mixture_pattern(mix, dp, 1e-6, 2049).visibility, 0.02);
    EXPECT_GT(interference::recombined_pattern(plus, dp, 1e-6, 2049).visibility, 0.95);

    coupling::Mixture twin{{{0.5, plus}, {0.5, plus}}};
    const auto a = interference::mixture_pattern(twin, dp, 1e-6, 2049);
    const auto b = interference::recombined_pattern(plus, dp, 1e-6, 2049);
    EXPECT_LT((a.intensity - b.intensity).cwiseAbs().maxCoeff(), 1e-12 * b.intensity.maxCoeff());
}
