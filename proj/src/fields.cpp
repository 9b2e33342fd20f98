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
#include "qsg/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsg::fields {

double onaxis_gradient_extremum_z(double R) {
    detail::require_finite("onaxis_gradient_extremum_z", R);
    detail::require_radius("onaxis_gradient_extremum_z", R);
    // |dBz/dz| for unit current is unimodal on [0, 2R].
    const auto objective = [R](double z) { return -std::abs(onaxis_dBz_dz(1.0, R, z)); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0;
    double b = 2.0 * R;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-12 * R) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    return 0.5 * (a + b);
}

FlatnessMap gradient_flatness_map(double I, double R, double z_center, double rho_extent, double z_extent, int n) {
    detail::require_finite("gradient_flatness_map", I, R, z_center, rho_extent, z_extent);
    detail::require_radius("gradient_flatness_map", R);
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "gradient_flatness_map: grid size must be at least 3");
    if (rho_extent < 0 || z_extent < 0) {
        throw Error(ErrorCode::InvalidArgument, "gradient_flatness_map: extents must be non-negative");
    }

    FlatnessMap map;
    map.rho = Eigen::VectorXd::LinSpaced(n, 0.0, 0.5 * rho_extent);
    map.z = Eigen::VectorXd::LinSpaced(n, z_center - 0.5 * z_extent, z_center + 0.5 * z_extent);

    const double rho_max = map.rho(n - 1);
    const bool spans_wire_plane = map.z(0) <= 0.0 && map.z(n - 1) >= 0.0;
    if (rho_max >= R && spans_wire_plane) {
        throw Error(ErrorCode::Singularity, "gradient_flatness_map: region contains the loop wire");
    }

    map.dBz_dz.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            map.dBz_dz(i, j) = loop_field(I, R, map.rho(i), map.z(j)).dBz_dz;
        }
    }
    map.reference = loop_field(I, R, 0.0, z_center).dBz_dz;
    if (map.reference != 0.0) {
        map.max_relative_deviation = ((map.dBz_dz.array() / map.reference) - 1.0).abs().maxCoeff();
    }
    return map;
}

LoopGeometry LoopGeometry::from_dimensions(double r_inner, double r_outer, double thickness) {
    detail::require_finite("LoopGeometry", r_inner, r_outer, thickness);
    if (!(r_inner > 0 && r_inner < r_outer)) {
        throw Error(ErrorCode::InvalidArgument, "LoopGeometry: need 0 < r_inner < r_outer");
    }
    if (!(thickness > 0)) throw Error(ErrorCode::InvalidArgument, "LoopGeometry: thickness must be positive");
    LoopGeometry g;
    g.r_inner = r_inner;
    g.r_outer = r_outer;
    g.thickness = thickness;
    g.r_mean = 0.5 * (r_inner + r_outer);
    g.a_equiv = 0.2235 * ((r_outer - r_inner) + thickness);
    return g;
}

double loop_self_inductance(double r_mean, double a_equiv) {
    detail::require_finite("loop_self_inductance", r_mean, a_equiv);
    if (!(a_equiv > 0) || a_equiv >= r_mean) {
        throw Error(ErrorCode::Domain, "loop_self_inductance: need 0 < a_equiv < r_mean");
    }
    return kPhysical.mu0 * r_mean * (std::log(8.0 * r_mean / a_equiv) - 2.0);
}

double loop_self_inductance(const LoopGeometry &geom) { return loop_self_inductance(geom.r_mean, geom.a_equiv); }

double dipole_Bz(const SpinState &spin, double x, double y, double z0) {
    detail::require_finite("dipole_Bz", x, y, z0);
    const double r2 = x * x + y * y + z0 * z0;
    if (r2 == 0.0) throw Error(ErrorCode::Singularity, "dipole_Bz: evaluation at the dipole location");
    const double prefactor = kPhysical.mu0 * spin.moment() / (4.0 * std::numbers::pi);
    const double r = std::sqrt(r2);
    const double r3 = r2 * r;
    return prefactor * (3.0 * z0 * z0 / (r3 * r2) - 1.0 / r3);
}

double dipole_flux_linked(const SpinState &spin, double R, double z0) {
    detail::require_finite("dipole_flux_linked", R, z0);
    detail::require_radius("dipole_flux_linked", R);
    if (z0 < 0) throw Error(ErrorCode::Domain, "dipole_flux_linked: z0 must be non-negative");
    return 0.5 * kPhysical.mu0 * spin.moment() * R * R / std::pow(R * R + z0 * z0, 1.5);
}

}  // namespace qsg::fields
