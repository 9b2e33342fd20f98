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

#include "qsg/constants.hpp"

namespace qsg {

/// Hyperfine spin state of one atom. Quantization axis is z.
struct SpinState {
    int F = 2;
    int m_F = 2;
    double g_F = 0.5;

    bool valid() const { return F >= 0 && m_F >= -F && m_F <= F; }

    /// m_F g_F mu_B, the projected magnetic moment (J/T).
    double moment() const { return m_F * g_F * kPhysical.mu_B; }
};

}  // namespace qsg
