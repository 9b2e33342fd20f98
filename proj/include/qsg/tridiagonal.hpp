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

#include <Eigen/Dense>

namespace qsg {

/// Lowest eigenpairs of a real symmetric tridiagonal matrix.
struct TridiagonalEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // unit 2-norm columns
};

/// Computes the k smallest eigenvalues by Sturm-sequence bisection and the
/// matching eigenvectors by inverse iteration. `off` holds the n-1
/// off-diagonal entries. Eigenvalues are accurate to a few ulps of the
/// matrix norm.
TridiagonalEigen lowest_eigenpairs(const Eigen::VectorXd &diag, const Eigen::VectorXd &off, int k);

/// Number of eigenvalues strictly below x.
int sturm_count(const Eigen::VectorXd &diag, const Eigen::VectorXd &off, double x);

}  // namespace qsg
