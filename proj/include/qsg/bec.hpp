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
#include <vector>

#include <Eigen/Dense>

#include "qsg/constants.hpp"
#include "qsg/fields.hpp"
#include "qsg/fluxqubit.hpp"
#include "qsg/spin.hpp"

/// Free-falling, spin-polarized, non-interacting condensate passing the loop.
/// Kicks are computed in the impulse approximation: the packet envelope is
/// frozen and only the z-momentum expectation changes.
namespace qsg::bec {

struct PacketConfig {
    std::int64_t N = 100000;
    double sigma_x = 5.0e-6;
    double sigma_y = 1.0e-6;
    double sigma_z = 1.0e-6;
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
    SpinState spin{2, 2, 0.5};
    double mass = kPhysical.m_Rb87;
};

/// Gaussian N-atom packet. Widths are 1/e half-widths of the density, so the
/// amplitude is exp(-z^2 / 2 sigma_z^2) and dp_z = hbar / sigma_z.
struct BECPacket {
    std::int64_t N = 1;
    double sigma_x = 0;
    double sigma_y = 0;
    double sigma_z = 0;
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
    SpinState spin;
    double mass_atom = 0;
    double dp_z = 0;
};

BECPacket make_packet(const PacketConfig &config = {});

/// Straight fall along +x at fixed (y, z) = (0, z_pass), uniformly sampled in t.
struct Trajectory {
    Eigen::VectorXd t;
    Eigen::VectorXd x;
    Eigen::VectorXd vx;
    double y = 0;
    double z = 0;
};

/// x(t) = x0 + v0_x t + g t^2 / 2 with x0 the packet center.
Trajectory freefall_trajectory(const BECPacket &packet, double z_pass, double v0_x, double t_span, int n_steps,
                               double g = kPhysical.g_grav);

/// Trajectory that starts at x = -window and ends exactly at x = +window.
Trajectory crossing_trajectory(const BECPacket &packet, double z_pass, double v0_x, double window, int n_steps,
                               double g = kPhysical.g_grav);

struct KickReport {
    double p_L = 0;
    double p_R = 0;
    double dp_z = 0;
    double dP_z = 0;
    double dt = 0;
    double gradient_integral_L = 0;  // T s / m
    double gradient_integral_R = 0;
    /// Kick velocity stays below 10% of the fall velocity, so the straight
    /// trajectory assumption holds.
    bool impulse_ok = true;
};

struct KickOptions {
    /// The interaction time counts samples whose |gradient| exceeds this
    /// fraction of the trajectory maximum.
    double threshold_fraction = 0.05;
    /// Adds sigma_x / v_x for the packet's own extent along the fall.
    bool widen_by_extent = true;
};

/// p_w = -m_F g_F mu_B \int dBz/dz dt along the trajectory for each well's
/// persistent current, by the trapezoid rule over samples with |x| <= window.
KickReport kick_integral(const BECPacket &packet, const Trajectory &trajectory,
                         const fluxqubit::DoubleWellSummary &fq_summary, const fields::LoopGeometry &loop,
                         double window, const KickOptions &options = {});

/// Kicks for a constant gradient held for dt; the right well sees the
/// opposite gradient.
KickReport idealized_kicks(const BECPacket &packet, const fluxqubit::DoubleWellSummary &fq_summary,
                           double gradient_L, double dt);

struct WeakCouplingThreshold {
    double v0_x;  // fall velocity at which |p_R - p_L| = dp_z
    double dt;    // interaction time at that velocity
    KickReport kicks;
};

/// Solves |p_R - p_L| = dp_z for the entry velocity by bisection in log v.
WeakCouplingThreshold weak_coupling_threshold(const BECPacket &packet, const fluxqubit::DoubleWellSummary &fq_summary,
                                              const fields::LoopGeometry &loop, double z_pass, double window,
                                              int n_steps, double g = kPhysical.g_grav,
                                              const KickOptions &options = {});

struct SpinAmplitude {
    int m_F;
    std::complex<double> amplitude;
};

struct SplitBranch {
    int m_F;
    std::complex<double> amplitude;
    double p_z;
    BECPacket packet;  // kicked copy
    bool resolved;     // separated from every other branch by more than dp_z
};

/// Classical-field Stern-Gerlach splitter: p_z = -m_F g_F mu_B (dBz/dz) dt.
std::vector<SplitBranch> semiclassical_split(const BECPacket &packet, const std::vector<SpinAmplitude> &amplitudes,
                                             double gradient, double dt);

/// Per-atom kicks of a polarized packet in a classical gradient. There is no
/// inter-atom term, so every entry is the same.
Eigen::VectorXd atom_kicks(const BECPacket &packet, double gradient, double dt);

}  // namespace qsg::bec
