// Copyright 2026 The qcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal: thin LAPACK front end for dense hermitian eigenproblems.

#pragma once

#include <Eigen/Core>

namespace qcb::detail {

struct RawEigenpairs {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // orthonormal columns
};

/**
 * Picks the cheapest applicable MRRR driver: dstevr for real tridiagonal
 * input, dsyevr for real symmetric, zheevr otherwise. Only the lower
 * triangle of `a` is referenced. Throws ConvergenceError on failure.
 */
RawEigenpairs hermitian_eigenpairs(const Eigen::MatrixXcd &a);

} // namespace qcb::detail
