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

#include "qsg/spin.hpp"

namespace qsg::backaction {

/// Flux that N co-located, z-polarized atoms at height z0 thread through a
/// zero-thickness loop of radius R, compared with the flux quantum.
struct BackactionReport {
    double phi_atom = 0;  // Wb
    std::int64_t N = 1;
    double ratio = 0;     // N phi_atom / Phi0
    bool negligible = true;
};

BackactionReport backaction_ratio(const SpinState &spin, std::int64_t N, double R, double z0,
                                  double negligible_below = 1e-2);

}  // namespace qsg::backaction
