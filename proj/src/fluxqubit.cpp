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
#include "qsg/fluxqubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsg/error.hpp"
#include "qsg/tridiagonal.hpp"

namespace qsg::fluxqubit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wavenumber() { return kTwoPi / kPhysical.Phi0; }

// Bisection on a sign change of dU/dPhi, then Newton polish.
double refine_stationary_point(const FluxQubitParams &params, double a, double b) {
    double fa = potential_slope(params, a);
    for (int iter = 0; iter < 200 && b - a > 1e-16 * kPhysical.Phi0; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = potential_slope(params, mid);
        if ((fm < 0) == (fa < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 3; ++iter) {
        const double curvature = potential_curvature(params, x);
        if (curvature == 0.0) break;
        const double step = potential_slope(params, x) / curvature;
        if (!(std::abs(step) < 1e-9 * kPhysical.Phi0)) break;
        x -= step;
    }
    return x;
}

struct Block {
    Eigen::VectorXd diag;
    Eigen::VectorXd off;
};

// Even/odd reduction of a mirror-symmetric tridiagonal with constant coupling.
Block parity_block(const Eigen::VectorXd &diag, double coupling, bool even) {
    const Eigen::Index n = diag.size();
    const Eigen::Index half = n / 2;
    Block b;
    if (n % 2 == 0) {
        b.diag = diag.head(half);
        b.diag(half - 1) += even ? coupling : -coupling;
        b.off = Eigen::VectorXd::Constant(half - 1, coupling);
    } else if (even) {
        b.diag = diag.head(half + 1);
        b.off = Eigen::VectorXd::Constant(half, coupling);
        b.off(half - 1) = std::numbers::sqrt2 * coupling;
    } else {
        b.diag = diag.head(half);
        b.off = Eigen::VectorXd::Constant(half - 1, coupling);
    }
    return b;
}

Eigen::VectorXd unfold(const Eigen::VectorXd &v, Eigen::Index n, bool even) {
    const Eigen::Index half = n / 2;
    const double sign = even ? 1.0 : -1.0;
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < half; ++i) {
        full(i) = v(i) / std::numbers::sqrt2;
        full(n - 1 - i) = sign * v(i) / std::numbers::sqrt2;
    }
    if (n % 2 == 1 && even) full(half) = v(half);
    return full;
}

void fix_sign(Eigen::VectorXd &v, const FluxGrid &grid, double phi_a) {
    Eigen::Index best = -1;
    double best_abs = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (grid.point(static_cast<int>(i)) < phi_a && std::abs(v(i)) > best_abs) {
            best_abs = std::abs(v(i));
            best = i;
        }
    }
    if (best < 0 || best_abs < 1e-8 * v.cwiseAbs().maxCoeff()) v.cwiseAbs().maxCoeff(&best);
    if (v(best) < 0) v = -v;
}

}  // namespace

double FluxQubitParams::E_j() const { return I_c * kPhysical.Phi0 / kTwoPi; }

double FluxQubitParams::beta() const { return kTwoPi * L * I_c / kPhysical.Phi0; }

void FluxQubitParams::validate() const {
    if (!(std::isfinite(L) && L > 0)) throw Error(ErrorCode::InvalidArgument, "FluxQubitParams: L must be positive");
    if (!(std::isfinite(C_j) && C_j > 0)) {
        throw Error(ErrorCode::InvalidArgument, "FluxQubitParams: C_j must be positive");
    }
    if (!(std::isfinite(I_c) && I_c >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "FluxQubitParams: I_c must be non-negative");
    }
    if (!std::isfinite(Phi_a)) throw Error(ErrorCode::InvalidArgument, "FluxQubitParams: Phi_a must be finite");
}

FluxQubitParams FluxQubitParams::reference_defaults() {
    FluxQubitParams p;
    p.L = 6.44e-12;
    p.C_j = 1e-15;
    p.I_c = kPhysical.Phi0 / (4.0 * p.L);
    p.Phi_a = 0.5 * kPhysical.Phi0;
    return p;
}

void FluxGrid::validate() const {
    if (!(std::isfinite(phi_min) && std::isfinite(phi_max) && phi_min < phi_max)) {
        throw Error(ErrorCode::InvalidArgument, "FluxGrid: need phi_min < phi_max");
    }
    if (n < 128) throw Error(ErrorCode::InvalidArgument, "FluxGrid: need at least 128 points");
}

FluxGrid FluxGrid::centered(const FluxQubitParams &params, int n) {
    return FluxGrid{params.Phi_a - 0.75 * kPhysical.Phi0, params.Phi_a + 0.75 * kPhysical.Phi0, n};
}

double FluxWavefunction::norm_squared() const { return amplitudes.squaredNorm() * grid.spacing(); }

double FluxWavefunction::mean_flux() const {
    const Eigen::VectorXd weights = amplitudes.cwiseAbs2();
    return weights.dot(grid.points()) / weights.sum();
}

std::complex<double> FluxWavefunction::inner(const FluxWavefunction &other) const {
    if (other.amplitudes.size() != amplitudes.size()) {
        throw Error(ErrorCode::InvalidArgument, "FluxWavefunction::inner: grid mismatch");
    }
    return amplitudes.dot(other.amplitudes) * grid.spacing();
}

QubitLogicalState QubitLogicalState::symmetric_ground() {
    return {std::complex<double>(std::numbers::sqrt2 / 2.0), std::complex<double>(std::numbers::sqrt2 / 2.0)};
}

double potential(const FluxQubitParams &params, double phi) {
    const double offset = phi - params.Phi_a;
    return offset * offset / (2.0 * params.L) + params.E_j() * (1.0 - std::cos(wavenumber() * phi));
}

double potential_slope(const FluxQubitParams &params, double phi) {
    return (phi - params.Phi_a) / params.L + params.E_j() * wavenumber() * std::sin(wavenumber() * phi);
}

double potential_curvature(const FluxQubitParams &params, double phi) {
    const double k = wavenumber();
    return 1.0 / params.L + params.E_j() * k * k * std::cos(k * phi);
}

Minima find_minima(const FluxQubitParams &params) {
    params.validate();
    const double phi0 = kPhysical.Phi0;
    if (params.Phi_a < 0.4 * phi0 || params.Phi_a > 0.6 * phi0) {
        throw Error(ErrorCode::InvalidArgument, "find_minima: Phi_a must lie within [0.4, 0.6] Phi0");
    }
    if (params.beta() <= 1.0) {
        throw Error(ErrorCode::NoDoubleWell, "find_minima: 2 pi L I_c / Phi0 must exceed 1");
    }

    // Stationary points inside one flux quantum of the bias.
    const int samples = 20000;
    const double lo = params.Phi_a - phi0;
    const double step = 2.0 * phi0 / samples;
    std::vector<double> minima;
    std::vector<double> maxima;
    double prev = potential_slope(params, lo);
    for (int i = 1; i <= samples; ++i) {
        const double a = lo + (i - 1) * step;
        const double b = lo + i * step;
        const double next = potential_slope(params, b);
        if (prev == 0.0 || (prev < 0) != (next < 0)) {
            const double root = refine_stationary_point(params, a, b);
            (prev < next ? minima : maxima).push_back(root);
        }
        prev = next;
    }
    if (maxima.empty()) throw Error(ErrorCode::NoDoubleWell, "find_minima: no central barrier");
    const double barrier_top = *std::min_element(maxima.begin(), maxima.end(), [&](double x, double y) {
        return std::abs(x - 0.5 * phi0) < std::abs(y - 0.5 * phi0);
    });

    double phi_L = -1;
    double phi_R = -1;
    bool has_L = false;
    bool has_R = false;
    for (double m : minima) {
        if (m < barrier_top && (!has_L || m > phi_L)) {
            phi_L = m;
            has_L = true;
        }
        if (m > barrier_top && (!has_R || m < phi_R)) {
            phi_R = m;
            has_R = true;
        }
    }
    if (!has_L || !has_R) throw Error(ErrorCode::NoDoubleWell, "find_minima: only one well found");
    return {phi_L, phi_R, potential(params, 0.5 * phi0) - potential(params, phi_L)};
}

double persistent_current(const FluxQubitParams &params, double phi) { return (phi - params.Phi_a) / params.L; }

std::vector<Eigenstate> eigenstates(const FluxQubitParams &params, const FluxGrid &grid, int k) {
    params.validate();
    grid.validate();
    if (k < 2 || k > grid.n) throw Error(ErrorCode::InvalidArgument, "eigenstates: need 2 <= k <= n");
    const double phi0 = kPhysical.Phi0;
    if (grid.phi_min > params.Phi_a - 0.5 * phi0 || grid.phi_max < params.Phi_a + 0.5 * phi0) {
        throw Error(ErrorCode::GridTooNarrow, "eigenstates: grid must span Phi_a +/- Phi0/2");
    }

    const int n = grid.n;
    const double h = grid.spacing();
    const double hbar = kPhysical.hbar;
    const double kinetic = hbar * hbar / (2.0 * params.C_j * h * h);

    Eigen::VectorXd U(n);
    for (int i = 0; i < n; ++i) U(i) = potential(params, grid.point(i));

    const double range = U.maxCoeff() - U.minCoeff();
    const bool symmetric = (U - U.reverse()).cwiseAbs().maxCoeff() <= 1e-9 * range;

    std::vector<std::pair<double, Eigen::VectorXd>> pairs;
    if (symmetric) {
        const Eigen::VectorXd diag = (0.5 * (U + U.reverse())).array() + 2.0 * kinetic;
        for (bool even : {true, false}) {
            const Block block = parity_block(diag, -kinetic, even);
            const int count = std::min<int>(k, static_cast<int>(block.diag.size()));
            const TridiagonalEigen sol = lowest_eigenpairs(block.diag, block.off, count);
            for (int j = 0; j < count; ++j) pairs.emplace_back(sol.values(j), unfold(sol.vectors.col(j), n, even));
        }
        std::sort(pairs.begin(), pairs.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        pairs.resize(k);
    } else {
        const Eigen::VectorXd diag = U.array() + 2.0 * kinetic;
        const TridiagonalEigen sol = lowest_eigenpairs(diag, Eigen::VectorXd::Constant(n - 1, -kinetic), k);
        for (int j = 0; j < k; ++j) pairs.emplace_back(sol.values(j), sol.vectors.col(j));
    }

    std::vector<Eigenstate> out;
    out.reserve(k);
    for (auto &[energy, v] : pairs) {
        fix_sign(v, grid, params.Phi_a);
        const double peak = v.cwiseAbs().maxCoeff();
        if (std::abs(v(0)) >= 1e-6 * peak || std::abs(v(n - 1)) >= 1e-6 * peak) {
            throw Error(ErrorCode::GridTooNarrow, "eigenstates: wavefunction does not vanish at the grid edges");
        }
        FluxWavefunction wf{grid, (v / std::sqrt(h)).cast<std::complex<double>>()};
        out.push_back({energy, std::move(wf)});
    }
    return out;
}

DoubleWellSummary two_gaussian_summary(const FluxQubitParams &params, const FluxGrid &grid) {
    const Minima minima = find_minima(params);
    DoubleWellSummary s;
    s.phi_L = minima.phi_L;
    s.phi_R = minima.phi_R;
    s.phi_a = params.Phi_a;
    s.barrier = minima.barrier;

    const double omega = std::sqrt(potential_curvature(params, s.phi_L) / params.C_j);
    s.delta_phi = std::sqrt(kPhysical.hbar / (2.0 * params.C_j * omega));
    const double separation = s.phi_R - s.phi_L;
    s.overlap = std::exp(-separation * separation / (4.0 * s.delta_phi * s.delta_phi));
    s.I_L = persistent_current(params, s.phi_L);
    s.I_R = persistent_current(params, s.phi_R);

    const auto states = eigenstates(params, grid, 2);
    s.splitting = states[1].energy - states[0].energy;

    // Each well holds a harmonic ground state whose |C|^2 has rms width delta_phi.
    const Eigen::VectorXd phi = grid.points();
    const double width2 = 4.0 * s.delta_phi * s.delta_phi;
    Eigen::VectorXd ansatz = (-(phi.array() - s.phi_L).square() / width2).exp() +
                             (-(phi.array() - s.phi_R).square() / width2).exp();
    ansatz /= std::sqrt(ansatz.squaredNorm() * grid.spacing());
    const std::complex<double> projection =
        ansatz.cast<std::complex<double>>().dot(states[0].wavefunction.amplitudes) * grid.spacing();
    s.fidelity = std::norm(projection);
    return s;
}

WellStates well_states(const std::vector<Eigenstate> &states) {
    if (states.size() < 2) throw Error(ErrorCode::InvalidArgument, "well_states: need two eigenstates");
    const FluxWavefunction &g = states[0].wavefunction;
    const FluxWavefunction &e = states[1].wavefunction;
    const double s = std::numbers::sqrt2 / 2.0;
    FluxWavefunction plus{g.grid, s * (g.amplitudes + e.amplitudes)};
    FluxWavefunction minus{g.grid, s * (g.amplitudes - e.amplitudes)};
    if (plus.mean_flux() < minus.mean_flux()) return {std::move(plus), std::move(minus)};
    return {std::move(minus), std::move(plus)};
}

QubitLogicalState hadamard(const QubitLogicalState &state) {
    const double s = std::numbers::sqrt2 / 2.0;
    return {s * (state.alpha_L + state.alpha_R), s * (state.alpha_L - state.alpha_R)};
}

FluxMeasurement measure_flux(const QubitLogicalState &state, Rng &rng) {
    const double total = state.norm_squared();
    const double p_L = std::norm(state.alpha_L) / total;
    const double p_R = std::norm(state.alpha_R) / total;
    if (rng.uniform() < p_L) return {FluxOutcome::L, p_L, p_L, p_R};
    return {FluxOutcome::R, p_R, p_L, p_R};
}

FluxMeasurement measure_flux(const QubitLogicalState &state, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return measure_flux(state, rng);
}

}  // namespace qsg::fluxqubit
