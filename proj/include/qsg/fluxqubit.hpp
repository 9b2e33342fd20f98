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
#include "qsg/rng.hpp"

/// rf-SQUID flux qubit: a superconducting loop of inductance L closed by one
/// Josephson junction (capacitance C_j, critical current I_c), biased by an
/// applied flux Phi_a. Flux plays the role of position and C_j of mass:
///
///   H = -(hbar^2 / 2 C_j) d^2/dPhi^2 + (Phi - Phi_a)^2 / 2L + E_j (1 - cos(2 pi Phi / Phi0))
namespace qsg::fluxqubit {

struct FluxQubitParams {
    double L = 6.44e-12;      // H
    double C_j = 1e-15;       // F
    double I_c = 0;           // A; zero gives the harmonic (linear inductor) limit
    double Phi_a = 0;         // Wb

    /// Josephson energy I_c Phi0 / 2 pi.
    double E_j() const;
    /// Screening parameter 2 pi L I_c / Phi0; a double well needs > 1.
    double beta() const;
    void validate() const;

    /// L = 6.44 pH, C_j = 1 fF, I_c = Phi0 / 4L, Phi_a = Phi0 / 2. The
    /// critical current is chosen so the minima sit at 0.25 and 0.75 Phi0.
    static FluxQubitParams reference_defaults();
};

/// Uniform flux grid with n points including both ends.
struct FluxGrid {
    double phi_min = 0;
    double phi_max = 0;
    int n = 0;

    double spacing() const { return (phi_max - phi_min) / (n - 1); }
    double point(int i) const { return phi_min + i * spacing(); }
    Eigen::VectorXd points() const { return Eigen::VectorXd::LinSpaced(n, phi_min, phi_max); }
    void validate() const;

    /// [Phi_a - 0.75 Phi0, Phi_a + 0.75 Phi0].
    static FluxGrid centered(const FluxQubitParams &params, int n = 4096);
};

/// Amplitude C(Phi) sampled on a grid, in 1/sqrt(Wb).
struct FluxWavefunction {
    FluxGrid grid;
    Eigen::VectorXcd amplitudes;

    double norm_squared() const;
    double mean_flux() const;
    std::complex<double> inner(const FluxWavefunction &other) const;  // <this|other>
};

struct Eigenstate {
    double energy;  // J
    FluxWavefunction wavefunction;
};

struct Minima {
    double phi_L;
    double phi_R;
    double barrier;  // U(Phi0/2) - U(phi_L)
};

struct DoubleWellSummary {
    double phi_L = 0;
    double phi_R = 0;
    double phi_a = 0;
    double barrier = 0;
    double delta_phi = 0;   // rms flux spread of each well's ground state
    double overlap = 0;     // exp(-(phi_R - phi_L)^2 / (4 delta_phi^2))
    double I_L = 0;
    double I_R = 0;
    double splitting = 0;   // E1 - E0
    double fidelity = 0;    // |<two-Gaussian ansatz | numerical ground state>|^2
};

struct QubitLogicalState {
    std::complex<double> alpha_L{1.0, 0.0};
    std::complex<double> alpha_R{0.0, 0.0};

    double norm_squared() const { return std::norm(alpha_L) + std::norm(alpha_R); }

    /// (|L> + |R>) / sqrt 2, the symmetric double-well ground state.
    static QubitLogicalState symmetric_ground();
};

enum class FluxOutcome { L, R };

struct FluxMeasurement {
    FluxOutcome outcome;
    double probability;  // Born probability of the observed outcome
    double p_L;
    double p_R;
};

double potential(const FluxQubitParams &params, double phi);
double potential_slope(const FluxQubitParams &params, double phi);
double potential_curvature(const FluxQubitParams &params, double phi);

/// Left and right minima of a double-well potential, found as roots of
/// dU/dPhi on either side of the central barrier.
Minima find_minima(const FluxQubitParams &params);

/// (phi - Phi_a) / L. Positive current increases the loop flux.
double persistent_current(const FluxQubitParams &params, double phi);

/// Lowest k eigenstates of the finite-difference Hamiltonian with Dirichlet
/// ends. A potential that is mirror symmetric on the grid is split into
/// even and odd blocks so that tunnel-split doublets stay resolved.
std::vector<Eigenstate> eigenstates(const FluxQubitParams &params, const FluxGrid &grid, int k);

DoubleWellSummary two_gaussian_summary(const FluxQubitParams &params, const FluxGrid &grid);

/// Localized well states (psi0 -/+ psi1)/sqrt 2, ordered so that left has the
/// smaller mean flux.
struct WellStates {
    FluxWavefunction left;
    FluxWavefunction right;
};
WellStates well_states(const std::vector<Eigenstate> &states);

QubitLogicalState hadamard(const QubitLogicalState &state);

FluxMeasurement measure_flux(const QubitLogicalState &state, Rng &rng);
FluxMeasurement measure_flux(const QubitLogicalState &state, std::uint64_t rng_seed);

}  // namespace qsg::fluxqubit
