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
#include "qsg/backaction.hpp"

#include <cmath>

#include "qsg/error.hpp"
#include "qsg/fields.hpp"

namespace qsg::backaction {

BackactionReport backaction_ratio(const SpinState &spin, std::int64_t N, double R, double z0,
                                  double negligible_below) {
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "backaction_ratio: N must be at least 1");
    BackactionReport r;
    r.phi_atom = fields::dipole_flux_linked(spin, R, z0);
    r.N = N;
    r.ratio = static_cast<double>(N) * r.phi_atom / kPhysical.Phi0;
    r.negligible = std::abs(r.ratio) < negligible_below;
    return r;
}

}  // namespace qsg::backaction
