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
#include "qsg/interference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "qsg/constants.hpp"
#include "qsg/error.hpp"

namespace qsg::interference {

namespace {

struct Grid {
    Eigen::VectorXd x;
    Eigen::VectorXd envelope;  // psi^{2N} up to normalization
};

Grid make_grid(std::int64_t N, double sigma, int n_points) {
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "pattern: N must be at least 1");
    if (!(sigma > 0)) throw Error(ErrorCode::InvalidArgument, "pattern: sigma must be positive");
    if (n_points < 3) throw Error(ErrorCode::InvalidArgument, "pattern: need at least 3 points");
    const double half_width = 5.0 * sigma / std::sqrt(static_cast<double>(N));
    Grid g;
    g.x = Eigen::VectorXd::LinSpaced(n_points, -half_width, half_width);
    g.envelope = (-static_cast<double>(N) * g.x.array().square() / (sigma * sigma)).exp();
    return g;
}

double trapezoid(const Eigen::VectorXd &x, const Eigen::VectorXd &y) {
    double total = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) total += 0.5 * (y(i) + y(i + 1)) * (x(i + 1) - x(i));
    return total;
}

// Unit-integral density and its interference term for one pure collapsed state.
std::pair<Eigen::VectorXd, Eigen::VectorXd> pure_density(const coupling::PathEntangledBEC &pe, const Grid &g,
                                                         double delta_p) {
    const double k = static_cast<double>(pe.N) * delta_p / kPhysical.hbar;
    const std::complex<double> c12 = pe.c1 * std::conj(pe.c2);
    const Eigen::Index n = g.x.size();
    Eigen::VectorXd density(n);
    Eigen::VectorXd cross(n);
    const double incoherent = std::norm(pe.c1) + std::norm(pe.c2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double interference = 2.0 * std::real(c12 * std::polar(1.0, k * g.x(i)));
        cross(i) = g.envelope(i) * interference;
        density(i) = g.envelope(i) * std::max(incoherent + interference, 0.0);
    }
    const double area = trapezoid(g.x, density);
    if (area > 0) {
        density /= area;
        cross /= area;
    }
    return {density, cross};
}

std::optional<double> crossing_period(const Grid &g, const Eigen::VectorXd &density, const Eigen::VectorXd &cross) {
    if (cross.cwiseAbs().maxCoeff() <= 1e-9 * density.maxCoeff()) return std::nullopt;
    const double floor = 1e-10 * g.envelope.maxCoeff();
    double first = 0;
    double last = 0;
    int count = 0;
    for (Eigen::Index i = 0; i + 1 < g.x.size(); ++i) {
        if (g.envelope(i) < floor || g.envelope(i + 1) < floor) continue;
        const double a = cross(i);
        const double b = cross(i + 1);
        if ((a >= 0) == (b >= 0)) continue;
        const double root = g.x(i) + (g.x(i + 1) - g.x(i)) * a / (a - b);
        if (count == 0) first = root;
        last = root;
        ++count;
    }
    if (count < 2) return std::nullopt;
    return 2.0 * (last - first) / (count - 1);
}

double central_visibility(const Grid &g, const Eigen::VectorXd &density, std::int64_t N, double delta_p) {
    if (delta_p == 0.0) return 0.0;
    const double window = nominal_period(N, delta_p);
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < g.x.size(); ++i) {
        if (std::abs(g.x(i)) > window) continue;
        const double fringe = density(i) / g.envelope(i);
        hi = std::max(hi, fringe);
        lo = std::min(lo, fringe);
    }
    if (!(hi > 0)) return 0.0;
    return (hi - lo) / (hi + lo);
}

FringePattern finish(const Grid &g, Eigen::VectorXd density, const Eigen::VectorXd &cross, std::int64_t N,
                     double delta_p) {
    FringePattern p;
    p.positions = g.x;
    p.N = N;
    p.delta_p = delta_p;
    p.period = delta_p == 0.0 ? std::nullopt : crossing_period(g, density, cross);
    p.visibility = central_visibility(g, density, N, delta_p);
    p.intensity = std::move(density);
    return p;
}

}  // namespace

double debroglie_wavelength(double mass, double speed) {
    if (!(std::isfinite(mass) && mass > 0)) throw Error(ErrorCode::Domain, "debroglie_wavelength: mass must be positive");
    if (!(std::isfinite(speed) && speed > 0)) {
        throw Error(ErrorCode::Domain, "debroglie_wavelength: speed must be positive");
    }
    return kPhysical.h / (mass * speed);
}

double nominal_period(std::int64_t N, double delta_p) {
    return 2.0 * std::numbers::pi * kPhysical.hbar / (static_cast<double>(N) * std::abs(delta_p));
}

int suggested_points(std::int64_t N, double delta_p, double sigma) {
    if (delta_p == 0.0) return 2049;
    const double support = 10.0 * sigma / std::sqrt(static_cast<double>(N));
    const double fringes = support / nominal_period(N, delta_p);
    return static_cast<int>(std::max(2049.0, 40.0 * fringes + 1.0));
}

FringePattern recombined_pattern(const coupling::PathEntangledBEC &pe, double delta_p, double sigma, int n_points) {
    if (pe.empty()) throw Error(ErrorCode::InvalidArgument, "recombined_pattern: collapsed state has zero norm");
    const Grid g = make_grid(pe.N, sigma, n_points);
    auto [density, cross] = pure_density(pe, g, delta_p);
    return finish(g, std::move(density), cross, pe.N, delta_p);
}

FringePattern mixture_pattern(const coupling::Mixture &mix, double delta_p, double sigma, int n_points) {
    if (mix.components.empty()) throw Error(ErrorCode::InvalidArgument, "mixture_pattern: empty mixture");
    const std::int64_t N = mix.components.front().state.N;
    const Grid g = make_grid(N, sigma, n_points);
    Eigen::VectorXd density = Eigen::VectorXd::Zero(g.x.size());
    Eigen::VectorXd cross = Eigen::VectorXd::Zero(g.x.size());
    const double total = mix.total_weight();
    for (const auto &c : mix.components) {
        auto [d, x] = pure_density(c.state, g, delta_p);
        density += (c.weight / total) * d;
        cross += (c.weight / total) * x;
    }
    return finish(g, std::move(density), cross, N, delta_p);
}

std::string export_pattern(const FringePattern &pattern, std::string_view header_line) {
    std::ostringstream out;
    char buf[128];
    out << header_line << '\n';
    out << "# N=" << pattern.N;
    std::snprintf(buf, sizeof buf, " delta_p=%.17g", pattern.delta_p);
    out << buf;
    if (pattern.period) {
        std::snprintf(buf, sizeof buf, " period=%.17g", *pattern.period);
    } else {
        std::snprintf(buf, sizeof buf, " period=none");
    }
    out << buf;
    std::snprintf(buf, sizeof buf, " visibility=%.17g", pattern.visibility);
    out << buf << '\n';
    out << "position_m,density_per_m\n";
    for (Eigen::Index i = 0; i < pattern.positions.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pattern.positions(i), pattern.intensity(i));
        out << buf;
    }
    return out.str();
}

}  // namespace qsg::interference
