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
#include "qsg/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qsg/error.hpp"

namespace qsg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int count_below(const Eigen::VectorXd &d, const Eigen::VectorXd &e, double x, double pivmin) {
    const Eigen::Index n = d.size();
    int count = 0;
    double q = d(0) - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < n; ++i) {
        q = d(i) - x - e(i - 1) * e(i - 1) / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

// LU with partial pivoting of (T - shift I), LAPACK gttrf layout.
class ShiftedTridiagonalLU {
   public:
    ShiftedTridiagonalLU(const Eigen::VectorXd &d, const Eigen::VectorXd &e, double shift, double tiny)
        : n_(d.size()), dl_(e), d_(d.array() - shift), du_(e), du2_(std::max<Eigen::Index>(n_ - 2, 0)), swap_(n_, 0) {
        du2_.setZero();
        for (Eigen::Index i = 0; i + 1 < n_; ++i) {
            if (std::abs(d_(i)) >= std::abs(dl_(i))) {
                if (d_(i) != 0.0) {
                    const double fact = dl_(i) / d_(i);
                    dl_(i) = fact;
                    d_(i + 1) -= fact * du_(i);
                }
            } else {
                const double fact = d_(i) / dl_(i);
                d_(i) = dl_(i);
                dl_(i) = fact;
                const double temp = du_(i);
                du_(i) = d_(i + 1);
                d_(i + 1) = temp - fact * d_(i + 1);
                if (i + 2 < n_) {
                    du2_(i) = du_(i + 1);
                    du_(i + 1) = -fact * du_(i + 1);
                }
                swap_[i] = 1;
            }
        }
        for (Eigen::Index i = 0; i < n_; ++i) {
            if (std::abs(d_(i)) < tiny) d_(i) = d_(i) < 0 ? -tiny : tiny;
        }
    }

    void solve_in_place(Eigen::VectorXd &b) const {
        for (Eigen::Index i = 0; i + 1 < n_; ++i) {
            if (!swap_[i]) {
                b(i + 1) -= dl_(i) * b(i);
            } else {
                const double temp = b(i);
                b(i) = b(i + 1);
                b(i + 1) = temp - dl_(i) * b(i);
            }
        }
        b(n_ - 1) /= d_(n_ - 1);
        if (n_ > 1) b(n_ - 2) = (b(n_ - 2) - du_(n_ - 2) * b(n_ - 1)) / d_(n_ - 2);
        for (Eigen::Index i = n_ - 3; i >= 0; --i) {
            b(i) = (b(i) - du_(i) * b(i + 1) - du2_(i) * b(i + 2)) / d_(i);
        }
    }

   private:
    Eigen::Index n_;
    Eigen::VectorXd dl_, d_, du_, du2_;
    std::vector<char> swap_;
};

Eigen::VectorXd start_vector(Eigen::Index n, int which) {
    // Fixed pseudo-random start so results are reproducible.
    std::uint64_t state = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(which + 1);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        v(i) = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    }
    return v.normalized();
}

}  // namespace

int sturm_count(const Eigen::VectorXd &diag, const Eigen::VectorXd &off, double x) {
    const double scale = std::max(diag.cwiseAbs().maxCoeff(), off.size() ? off.cwiseAbs().maxCoeff() : 0.0);
    const double pivmin = std::max(scale, 1.0) * std::numeric_limits<double>::min();
    return count_below(diag, off, x, pivmin);
}

TridiagonalEigen lowest_eigenpairs(const Eigen::VectorXd &diag, const Eigen::VectorXd &off, int k) {
    const Eigen::Index n = diag.size();
    if (n < 1 || off.size() != n - 1) {
        throw Error(ErrorCode::InvalidArgument, "lowest_eigenpairs: inconsistent tridiagonal dimensions");
    }
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "lowest_eigenpairs: k out of range");

    // Work on a unit-norm copy; eigenvalues are rescaled on return.
    double scale = diag.cwiseAbs().maxCoeff() + 2.0 * (n > 1 ? off.cwiseAbs().maxCoeff() : 0.0);
    if (scale == 0.0) scale = 1.0;
    const Eigen::VectorXd d = diag / scale;
    const Eigen::VectorXd e = off / scale;
    const double pivmin = std::numeric_limits<double>::min() / kEps;

    double lower = d(0);
    double upper = d(0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(e(i - 1)) : 0.0) + (i + 1 < n ? std::abs(e(i)) : 0.0);
        lower = std::min(lower, d(i) - radius);
        upper = std::max(upper, d(i) + radius);
    }

    TridiagonalEigen out;
    out.values.resize(k);
    for (int j = 0; j < k; ++j) {
        double lo = lower;
        double hi = upper;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(d, e, mid, pivmin) > j) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.values(j) = 0.5 * (lo + hi);
    }

    out.vectors.resize(n, k);
    const double tiny = kEps * 1e-3;
    for (int j = 0; j < k; ++j) {
        const ShiftedTridiagonalLU lu(d, e, out.values(j), tiny);
        Eigen::VectorXd v = start_vector(n, j);
        for (int iter = 0; iter < 6; ++iter) {
            lu.solve_in_place(v);
            for (int prev = 0; prev < j; ++prev) v -= out.vectors.col(prev).dot(v) * out.vectors.col(prev);
            v.normalize();
        }
        out.vectors.col(j) = v;
    }
    out.values *= scale;
    return out;
}

}  // namespace qsg
