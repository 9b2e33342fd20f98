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
#include <limits>
#include <numbers>

namespace qsg {

template <typename Scalar>
struct EllipticPair {
    Scalar K;
    Scalar E;
};

/// Complete elliptic integrals K(m) and E(m) of parameter m = k^2, 0 <= m < 1,
/// by the arithmetic-geometric mean. Converges quadratically.
template <typename Scalar>
EllipticPair<Scalar> complete_elliptic(Scalar m) {
    using std::abs;
    using std::sqrt;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();

    Scalar a = 1;
    Scalar b = sqrt(Scalar(1) - m);
    Scalar c = sqrt(m);
    Scalar weight = Scalar(0.5);
    Scalar sum = weight * c * c;
    for (int iter = 0; iter < 64 && abs(c) > eps * a; ++iter) {
        const Scalar a_next = (a + b) / 2;
        c = (a - b) / 2;
        b = sqrt(a * b);
        a = a_next;
        weight *= 2;
        sum += weight * c * c;
    }
    const Scalar K = pi / (2 * a);
    return {K, K * (Scalar(1) - sum)};
}

}  // namespace qsg
