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

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "qsg/error.hpp"
#include "test_setup.hpp"

using namespace qsg;
using namespace qsg::bec;

namespace {

const fields::LoopGeometry kLoop = fields::LoopGeometry::from_dimensions(2e-6, 2.5e-6, 1e-6);

KickReport kicks_at(const BECPacket &packet, double v, double g = 0.0, double z = 1.25e-6) {
    const auto tr = crossing_trajectory(packet, z, v, 30e-6, 8001, g);
    return kick_integral(packet, tr, test::default_summary(), kLoop, 30e-6);
}

}  // namespace

TEST(bec, packet_defaults_and_validation) {
    const auto p = make_packet();
    EXPECT_EQ(p.N, 100000);
    EXPECT_NEAR(p.dp_z, kPhysical.hbar / 1e-6, 1e-40);
    EXPECT_NEAR(p.spin.moment(), kPhysical.mu_B, 1e-36);
    PacketConfig bad;
    bad.N = 0;
    EXPECT_THROW(make_packet(bad), Error);
    bad = {};
    bad.sigma_z = 0;
    EXPECT_THROW(make_packet(bad), Error);
    bad = {};
    bad.spin.m_F = 3;
    EXPECT_THROW(make_packet(bad), Error);
}

TEST(bec, crossing_trajectory_covers_window) {
    const auto p = make_packet();
    const auto tr = crossing_trajectory(p, 1.25e-6, 4.5, 30e-6, 1001);
    EXPECT_DOUBLE_EQ(tr.x(0), -30e-6);
    EXPECT_DOUBLE_EQ(tr.x(tr.x.size() - 1), 30e-6);
    EXPECT_GT(tr.vx(tr.vx.size() - 1), tr.vx(0));
    EXPECT_THROW(crossing_trajectory(p, 1.25e-6, 0.0, 30e-6, 1001, 0.0), Error);
}

TEST(bec, kick_matches_line_integral_without_gravity) {
    const auto p = make_packet();
    const double v = 4.5;
    const auto k = kicks_at(p, v);
    const double I_L = test::default_summary().I_L;
    const double line = oracle::integrate(
        [](double x) { return fields::loop_field(1.0, kLoop.r_mean, std::abs(x), 1.25e-6).dBz_dz; }, -30e-6, 30e-6,
        240, 16);
    const double expected = -p.spin.moment() * I_L * line / v;
    EXPECT_NEAR(k.p_L, expected, 1e-6 * std::abs(expected));
    EXPECT_NEAR(k.p_R, -k.p_L, 1e-12 * std::abs(k.p_L));
    EXPECT_NEAR(k.dP_z, std::abs(k.p_L) * 0.06291568149290913 * 2.0, 1e-9 * std::abs(k.p_L));
    EXPECT_TRUE(k.impulse_ok);
}

TEST(bec, property_kick_scales_inverse_velocity) {
    const auto p = make_packet();
    oracle::Gen gen(8);
    const auto ref = kicks_at(p, 1.0);
    for (int i = 0; i < 10; ++i) {
        const double v = gen.log_uniform(0.1, 50.0);
        const auto k = kicks_at(p, v);
        EXPECT_NEAR(k.p_L * v, ref.p_L, 1e-9 * std::abs(ref.p_L));
        EXPECT_NEAR(k.dt * v, ref.dt, 1e-3 * ref.dt);
    }
}

TEST(bec, property_gravity_shortens_interaction) {
    const auto p = make_packet();
    // Below about 0.2 m/s the fall speeds up noticeably inside the window.
    for (double v : {0.02, 0.05, 0.2}) {
        const auto free = kicks_at(p, v, 0.0);
        const auto fall = kicks_at(p, v, kPhysical.g_grav);
        EXPECT_LT(std::abs(fall.p_L), std::abs(free.p_L));
        EXPECT_LT(fall.dt, free.dt);
    }
}

TEST(bec, interaction_time_at_reference_velocity) {
    // Above-threshold span of 10.08 um plus sigma_x, crossed at 5.27 m/s.
    const auto p = make_packet();
    const auto w = weak_coupling_threshold(p, test::default_summary(), kLoop, 1.25e-6, 30e-6, 8001);
    EXPECT_NEAR(std::abs(w.kicks.p_R - w.kicks.p_L) / w.kicks.dp_z, 1.0, 1e-9);
    EXPECT_GT(w.dt, 0.5e-6);
    EXPECT_LT(w.dt, 4.0e-6);
    EXPECT_NEAR(w.v0_x, 5.27, 0.05);
}

TEST(bec, missing_the_loop_is_an_error) {
    const auto p = make_packet();
    try {
        kicks_at(p, 4.5, 0.0, 1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NoInteraction);
    }
}

TEST(bec, idealized_kick_values) {
    const auto p = make_packet();
    const auto k = idealized_kicks(p, test::default_summary(), 8.18, 20e-6);
    EXPECT_NEAR(k.p_L, -1.517e-27, 0.001e-27);
    EXPECT_NEAR(k.p_R, 1.517e-27, 0.001e-27);
    EXPECT_NEAR(std::abs(k.p_L) / k.dp_z, 14.4, 0.05);
}

TEST(bec, property_kicks_linear_in_time_and_gradient) {
    const auto p = make_packet();
    oracle::Gen gen(10);
    const auto base = idealized_kicks(p, test::default_summary(), 1.0, 1e-6);
    for (int i = 0; i < 50; ++i) {
        const double g = gen.uniform(-20.0, 20.0);
        const double dt = gen.log_uniform(1e-8, 1e-4);
        const auto k = idealized_kicks(p, test::default_summary(), g, dt);
        const double scale = g * dt / 1e-6;
        EXPECT_NEAR(k.p_L, scale * base.p_L, 1e-12 * std::abs(k.p_L));
        EXPECT_NEAR(k.p_R, -k.p_L, 1e-12 * std::abs(k.p_L));
    }
}

TEST(bec, property_kicks_linear_in_loop_current) {
    const auto p = make_packet();
    const auto tr = crossing_trajectory(p, 1.25e-6, 4.5, 30e-6, 8001);
    const auto ref = kick_integral(p, tr, test::default_summary(), kLoop, 30e-6);
    for (double f : {0.1, 0.5, 2.0}) {
        auto s = test::default_summary();
        s.I_L *= f;
        s.I_R *= f;
        const auto k = kick_integral(p, tr, s, kLoop, 30e-6);
        EXPECT_NEAR(k.p_L, f * ref.p_L, 1e-12 * std::abs(ref.p_L));
    }
}

TEST(bec, trapezoid_refinement) {
    const auto p = make_packet();
    for (double v : {0.5, 4.5, 20.0}) {
        const auto coarse = kick_integral(p, crossing_trajectory(p, 1.25e-6, v, 30e-6, 8001), test::default_summary(),
                                          kLoop, 30e-6);
        const auto fine = kick_integral(p, crossing_trajectory(p, 1.25e-6, v, 30e-6, 16001), test::default_summary(),
                                        kLoop, 30e-6);
        EXPECT_NEAR(fine.gradient_integral_L, coarse.gradient_integral_L, 1e-4 * std::abs(fine.gradient_integral_L));
    }
}

TEST(bec, semiclassical_split_kicks_follow_m_F) {
    const auto p = make_packet();
    const double a = 1.0 / std::sqrt(5.0);
    std::vector<SpinAmplitude> amps;
    for (int m = -2; m <= 2; ++m) amps.push_back({m, a});
    const auto branches = semiclassical_split(p, amps, 8.18, 20e-6);
    ASSERT_EQ(branches.size(), 5u);
    const double unit = -p.spin.g_F * kPhysical.mu_B * 8.18 * 20e-6;
    for (const auto &b : branches) {
        EXPECT_NEAR(b.p_z, b.m_F * unit, 1e-12 * std::abs(unit));
        EXPECT_TRUE(b.resolved);
    }
    const auto weak = semiclassical_split(p, amps, 8.18, 1e-7);
    for (const auto &b : weak) EXPECT_FALSE(b.resolved);
    EXPECT_THROW(semiclassical_split(p, {{2, 0.5}}, 8.18, 1e-6), Error);
}

TEST(bec, atom_kicks_are_identical) {
    PacketConfig cfg;
    cfg.N = 100;
    const auto p = make_packet(cfg);
    const auto k = atom_kicks(p, 8.18, 1e-6);
    EXPECT_EQ(k.size(), 100);
    EXPECT_DOUBLE_EQ(k.maxCoeff(), k.minCoeff());
}
