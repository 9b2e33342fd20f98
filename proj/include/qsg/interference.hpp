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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qsg/coupling.hpp"

/// Recombination of the two momentum branches and N-fold coincidence
/// detection. The detector sees |c1 psi_1(x)^N + c2 psi_2(x)^N|^2 with
/// Gaussian envelopes exp(-x^2 / 2 sigma^2) brought to a common center and
/// carrying momenta -/+ delta_p / 2, so fringes repeat every 2 pi hbar / (N delta_p).
namespace qsg::interference {

struct FringePattern {
    Eigen::VectorXd positions;  // m
    Eigen::VectorXd intensity;  // 1/m, unit integral over positions
    std::optional<double> period;
    double visibility = 0;  // fringe contrast of intensity / envelope within one nominal period of x = 0
    std::int64_t N = 1;
    double delta_p = 0;
};

double debroglie_wavelength(double mass, double speed);

/// 2 pi hbar / (N delta_p).
double nominal_period(std::int64_t N, double delta_p);

/// Enough samples for about 40 points per fringe across the support.
int suggested_points(std::int64_t N, double delta_p, double sigma);

FringePattern recombined_pattern(const coupling::PathEntangledBEC &pe, double delta_p, double sigma, int n_points);

FringePattern mixture_pattern(const coupling::Mixture &mix, double delta_p, double sigma, int n_points);

/// Two comma-separated columns (position_m, density_per_m) after a comment
/// block holding `header_line` and the pattern summary.
std::string export_pattern(const FringePattern &pattern, std::string_view header_line);

}  // namespace qsg::interference
