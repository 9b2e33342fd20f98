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

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "qsg/constants.hpp"
#include "qsg/elliptic.hpp"
#include "qsg/error.hpp"
#include "qsg/spin.hpp"

/// Magnetostatics of an ideal filamentary circular loop in the x-y plane,
/// centered at the origin, and of point magnetic dipoles. SI units throughout.
/// Positive current circulates anticlockwise seen from +z, so B_z > 0 on axis.
namespace qsg::fields {

template <typename Scalar>
struct FieldSample {
    Scalar B_rho;
    Scalar B_z;
    Scalar dBz_dz;
};

namespace detail {

template <typename... Ts>
void require_finite(const char *what, Ts... values) {
    using std::isfinite;
    if (!(isfinite(values) && ...)) {
        throw Error(ErrorCode::Domain, std::string(what) + ": non-finite input");
    }
}

template <typename Scalar>
void require_radius(const char *what, Scalar R) {
    if (!(R > 0)) throw Error(ErrorCode::Domain, std::string(what) + ": loop radius must be positive");
}

// B_z only; shared by loop_field and its finite-difference gradient.
template <typename Scalar>
Scalar loop_Bz(Scalar I, Scalar R, Scalar rho, Scalar z) {
    using std::pow;
    using std::sqrt;
    const Scalar mu0 = Scalar(kPhysical.mu0);
    if (rho == 0) return mu0 * I * R * R / (2 * pow(R * R + z * z, Scalar(1.5)));
    const Scalar r2 = rho * rho + z * z;
    const Scalar alpha2 = R * R + r2 - 2 * R * rho;
    const Scalar beta2 = R * R + r2 + 2 * R * rho;
    const Scalar beta = sqrt(beta2);
    const auto ell = complete_elliptic(Scalar(4) * R * rho / beta2);
    const Scalar C = mu0 * I / std::numbers::pi_v<Scalar>;
    return C / (2 * alpha2 * beta) * ((R * R - r2) * ell.E + alpha2 * ell.K);
}

}  // namespace detail

/// On-axis field mu0 I R^2 / 2 (R^2 + z^2)^{3/2}.
template <typename Scalar>
Scalar onaxis_Bz(Scalar I, Scalar R, Scalar z) {
    detail::require_finite("onaxis_Bz", I, R, z);
    detail::require_radius("onaxis_Bz", R);
    return detail::loop_Bz(I, R, Scalar(0), z);
}

template <typename Scalar>
Scalar onaxis_dBz_dz(Scalar I, Scalar R, Scalar z) {
    using std::pow;
    detail::require_finite("onaxis_dBz_dz", I, R, z);
    detail::require_radius("onaxis_dBz_dz", R);
    const Scalar mu0 = Scalar(kPhysical.mu0);
    return Scalar(-1.5) * mu0 * I * R * R * z / pow(R * R + z * z, Scalar(2.5));
}

/// Exact ideal-loop field at cylindrical (rho, z) via complete elliptic
/// integrals. The gradient is a central difference in z with step R 1e-5.
template <typename Scalar>
FieldSample<Scalar> loop_field(Scalar I, Scalar R, Scalar rho, Scalar z) {
    using std::abs;
    using std::pow;
    using std::sqrt;
    detail::require_finite("loop_field", I, R, rho, z);
    detail::require_radius("loop_field", R);
    if (rho < 0) throw Error(ErrorCode::Domain, "loop_field: rho must be non-negative");

    const Scalar step = R * Scalar(1e-5);
    if (rho == R && abs(z) <= step) {
        throw Error(ErrorCode::Singularity, "loop_field: evaluation point lies on the wire");
    }

    FieldSample<Scalar> out{};
    out.B_z = detail::loop_Bz(I, R, rho, z);
    out.dBz_dz = (detail::loop_Bz(I, R, rho, z + step) - detail::loop_Bz(I, R, rho, z - step)) / (2 * step);

    const Scalar mu0 = Scalar(kPhysical.mu0);
    if (rho == 0) {
        out.B_rho = 0;
    } else if (rho < R * Scalar(1e-3)) {
        // Near the axis the elliptic bracket cancels to O(m^2). Use the
        // paraxial series B_rho = -(rho/2) B1 + (rho^3/16) B3 instead, with
        // Bk the k-th z derivative of the on-axis field.
        const Scalar s = R * R + z * z;
        const Scalar c0 = mu0 * I * R * R / 2;
        const Scalar b1 = -3 * c0 * z / pow(s, Scalar(2.5));
        const Scalar b3 = 15 * c0 * z * (3 * R * R - 4 * z * z) / pow(s, Scalar(4.5));
        out.B_rho = -rho / 2 * b1 + rho * rho * rho / 16 * b3;
    } else {
        const Scalar r2 = rho * rho + z * z;
        const Scalar alpha2 = R * R + r2 - 2 * R * rho;
        const Scalar beta2 = R * R + r2 + 2 * R * rho;
        const Scalar beta = sqrt(beta2);
        const auto ell = complete_elliptic(Scalar(4) * R * rho / beta2);
        const Scalar C = mu0 * I / std::numbers::pi_v<Scalar>;
        out.B_rho = C * z / (2 * alpha2 * beta * rho) * ((R * R + r2) * ell.E - alpha2 * ell.K);
    }
    return out;
}

/// Position z >= 0 of the extremum of |dBz/dz| on the axis, found by
/// golden-section search over [0, 2R].
double onaxis_gradient_extremum_z(double R);

/// Samples of dBz/dz over the half-plane rectangle
/// rho in [0, rho_extent/2], z in [z_center - z_extent/2, z_center + z_extent/2].
struct FlatnessMap {
    Eigen::VectorXd rho;
    Eigen::VectorXd z;
    Eigen::MatrixXd dBz_dz;  // dBz_dz(i, j) at (rho(i), z(j))
    double reference = 0;    // gradient at (0, z_center)
    double max_relative_deviation = 0;
};

FlatnessMap gradient_flatness_map(double I, double R, double z_center, double rho_extent, double z_extent, int n);

/// Cross-section of a flat superconducting ring.
struct LoopGeometry {
    double r_inner = 0;
    double r_outer = 0;
    double thickness = 0;
    double r_mean = 0;
    double a_equiv = 0;  // geometric-mean-distance wire radius, 0.2235 (w + t)

    static LoopGeometry from_dimensions(double r_inner, double r_outer, double thickness);
};

/// mu0 r (ln(8 r / a) - 2) for a circular loop of mean radius r and wire radius a.
double loop_self_inductance(const LoopGeometry &geom);
double loop_self_inductance(double r_mean, double a_equiv);

/// z-component of the field of a z-polarized point dipole located on the
/// axis at height z0, evaluated at (x, y) in the loop plane.
double dipole_Bz(const SpinState &spin, double x, double y, double z0);

/// Flux of that dipole through a coaxial loop of radius R.
double dipole_flux_linked(const SpinState &spin, double R, double z0);

}  // namespace qsg::fields
