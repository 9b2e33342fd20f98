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
#include "qsg/bec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsg/error.hpp"

namespace qsg::bec {

namespace {

void require_positive(const char *name, double value) {
    if (!(std::isfinite(value) && value > 0)) {
        throw Error(ErrorCode::Config, std::string("make_packet: ") + name + " must be positive and finite");
    }
}

double flux_to_kick_spread(const fluxqubit::DoubleWellSummary &s, double p_L) {
    const double lever = std::abs(s.phi_L - s.phi_a);
    return lever > 0 ? std::abs(p_L) * s.delta_phi / lever : 0.0;
}

}  // namespace

BECPacket make_packet(const PacketConfig &config) {
    if (config.N < 1) throw Error(ErrorCode::Config, "make_packet: N must be at least 1");
    require_positive("sigma_x", config.sigma_x);
    require_positive("sigma_y", config.sigma_y);
    require_positive("sigma_z", config.sigma_z);
    require_positive("mass", config.mass);
    if (!config.spin.valid()) throw Error(ErrorCode::Config, "make_packet: need -F <= m_F <= F");
    if (!std::isfinite(config.spin.g_F) || !config.center.allFinite() || !config.velocity.allFinite()) {
        throw Error(ErrorCode::Config, "make_packet: non-finite input");
    }
    BECPacket p;
    p.N = config.N;
    p.sigma_x = config.sigma_x;
    p.sigma_y = config.sigma_y;
    p.sigma_z = config.sigma_z;
    p.center = config.center;
    p.velocity = config.velocity;
    p.spin = config.spin;
    p.mass_atom = config.mass;
    p.dp_z = kPhysical.hbar / config.sigma_z;
    return p;
}

Trajectory freefall_trajectory(const BECPacket &packet, double z_pass, double v0_x, double t_span, int n_steps,
                               double g) {
    if (n_steps < 2) throw Error(ErrorCode::InvalidArgument, "freefall_trajectory: need at least 2 samples");
    if (!(t_span > 0)) throw Error(ErrorCode::InvalidArgument, "freefall_trajectory: t_span must be positive");
    Trajectory tr;
    tr.t = Eigen::VectorXd::LinSpaced(n_steps, 0.0, t_span);
    tr.x = packet.center.x() + v0_x * tr.t.array() + 0.5 * g * tr.t.array().square();
    tr.vx = v0_x + g * tr.t.array();
    tr.y = 0.0;
    tr.z = z_pass;
    return tr;
}

Trajectory crossing_trajectory(const BECPacket &packet, double z_pass, double v0_x, double window, int n_steps,
                               double g) {
    if (!(window > 0)) throw Error(ErrorCode::InvalidArgument, "crossing_trajectory: window must be positive");
    if (v0_x < 0 || g < 0 || (v0_x == 0 && g == 0)) {
        throw Error(ErrorCode::InvalidArgument, "crossing_trajectory: the packet must move along +x");
    }
    const double distance = 2.0 * window;
    const double t_span = g > 0 ? 2.0 * distance / (v0_x + std::sqrt(v0_x * v0_x + 2.0 * g * distance))
                                : distance / v0_x;
    BECPacket start = packet;
    start.center.x() = -window;
    Trajectory tr = freefall_trajectory(start, z_pass, v0_x, t_span, n_steps, g);
    tr.x(tr.x.size() - 1) = window;
    return tr;
}

KickReport kick_integral(const BECPacket &packet, const Trajectory &trajectory,
                         const fluxqubit::DoubleWellSummary &fq_summary, const fields::LoopGeometry &loop,
                         double window, const KickOptions &options) {
    const Eigen::Index n = trajectory.t.size();
    if (n < 2 || trajectory.x.size() != n || trajectory.vx.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "kick_integral: malformed trajectory");
    }
    if (trajectory.x(0) > -window || trajectory.x(n - 1) < window) {
        throw Error(ErrorCode::InvalidArgument, "kick_integral: trajectory does not cover the interaction window");
    }

    // Gradient per ampere; the field is linear in the loop current.
    Eigen::VectorXd unit_gradient = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = trajectory.x(i);
        if (std::abs(x) > window) continue;
        const double rho = std::hypot(x, trajectory.y);
        unit_gradient(i) = fields::loop_field(1.0, loop.r_mean, rho, trajectory.z).dBz_dz;
    }

    double integral = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        integral += 0.5 * (unit_gradient(i) + unit_gradient(i + 1)) * (trajectory.t(i + 1) - trajectory.t(i));
    }

    Eigen::Index peak = 0;
    const double max_unit = unit_gradient.cwiseAbs().maxCoeff(&peak);
    const double max_current = std::max(std::abs(fq_summary.I_L), std::abs(fq_summary.I_R));
    if (max_current > 0 && max_unit * max_current < 1e-6) {
        throw Error(ErrorCode::NoInteraction, "kick_integral: trajectory misses the field region");
    }

    KickReport report;
    report.dp_z = packet.dp_z;
    report.gradient_integral_L = fq_summary.I_L * integral;
    report.gradient_integral_R = fq_summary.I_R * integral;
    const double moment = packet.spin.moment();
    report.p_L = -moment * report.gradient_integral_L;
    report.p_R = -moment * report.gradient_integral_R;
    report.dP_z = flux_to_kick_spread(fq_summary, report.p_L);

    if (max_unit > 0) {
        const double threshold = options.threshold_fraction * max_unit;
        Eigen::Index first = -1;
        Eigen::Index last = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(unit_gradient(i)) > threshold) {
                if (first < 0) first = i;
                last = i;
            }
        }
        report.dt = trajectory.t(last) - trajectory.t(first);
        if (options.widen_by_extent) report.dt += packet.sigma_x / trajectory.vx(peak);
    }

    const double kick_velocity = std::max(std::abs(report.p_L), std::abs(report.p_R)) / packet.mass_atom;
    report.impulse_ok = kick_velocity < 0.1 * trajectory.vx.cwiseAbs().minCoeff();
    return report;
}

KickReport idealized_kicks(const BECPacket &packet, const fluxqubit::DoubleWellSummary &fq_summary,
                           double gradient_L, double dt) {
    KickReport report;
    report.dp_z = packet.dp_z;
    report.dt = dt;
    report.gradient_integral_L = gradient_L * dt;
    report.gradient_integral_R = -gradient_L * dt;
    const double moment = packet.spin.moment();
    report.p_L = -moment * report.gradient_integral_L;
    report.p_R = -moment * report.gradient_integral_R;
    report.dP_z = flux_to_kick_spread(fq_summary, report.p_L);
    return report;
}

WeakCouplingThreshold weak_coupling_threshold(const BECPacket &packet, const fluxqubit::DoubleWellSummary &fq_summary,
                                              const fields::LoopGeometry &loop, double z_pass, double window,
                                              int n_steps, double g, const KickOptions &options) {
    const auto evaluate = [&](double v) {
        const Trajectory tr = crossing_trajectory(packet, z_pass, v, window, n_steps, g);
        return kick_integral(packet, tr, fq_summary, loop, window, options);
    };
    const auto ratio = [&](const KickReport &k) { return std::abs(k.p_R - k.p_L) / k.dp_z; };

    double log_lo = std::log(1e-3);
    double log_hi = std::log(1e3);
    if (ratio(evaluate(std::exp(log_lo))) < 1.0 || ratio(evaluate(std::exp(log_hi))) > 1.0) {
        throw Error(ErrorCode::NoInteraction, "weak_coupling_threshold: no crossing for 1 mm/s < v < 1 km/s");
    }
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (log_lo + log_hi);
        if (ratio(evaluate(std::exp(mid))) > 1.0) {
            log_lo = mid;
        } else {
            log_hi = mid;
        }
    }
    const double v = std::exp(0.5 * (log_lo + log_hi));
    KickReport kicks = evaluate(v);
    return {v, kicks.dt, kicks};
}

std::vector<SplitBranch> semiclassical_split(const BECPacket &packet, const std::vector<SpinAmplitude> &amplitudes,
                                             double gradient, double dt) {
    double total = 0.0;
    for (const auto &a : amplitudes) {
        if (a.m_F < -packet.spin.F || a.m_F > packet.spin.F) {
            throw Error(ErrorCode::InvalidArgument, "semiclassical_split: m_F outside -F..F");
        }
        total += std::norm(a.amplitude);
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "semiclassical_split: amplitudes must be normalized");
    }

    std::vector<SplitBranch> branches;
    branches.reserve(amplitudes.size());
    for (const auto &a : amplitudes) {
        SplitBranch b;
        b.m_F = a.m_F;
        b.amplitude = a.amplitude;
        b.p_z = -a.m_F * packet.spin.g_F * kPhysical.mu_B * gradient * dt;
        b.packet = packet;
        b.packet.spin.m_F = a.m_F;
        b.packet.velocity.z() += b.p_z / packet.mass_atom;
        b.resolved = true;
        branches.push_back(b);
    }
    for (auto &b : branches) {
        for (const auto &other : branches) {
            if (&other != &b && std::abs(other.p_z - b.p_z) <= packet.dp_z) b.resolved = false;
        }
    }
    return branches;
}

Eigen::VectorXd atom_kicks(const BECPacket &packet, double gradient, double dt) {
    Eigen::VectorXd kicks(packet.N);
    for (std::int64_t atom = 0; atom < packet.N; ++atom) {
        kicks(atom) = -packet.spin.moment() * gradient * dt;
    }
    return kicks;
}

}  // namespace qsg::bec
