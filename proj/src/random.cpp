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

#include "qcbench/random.hpp"

namespace qcb {

HermitianOperator random_hermitian(std::size_t dim, Rng &rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, j) = {u(rng), u(rng)};
        }
    }
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = h(i, i).real();
    }
    return certify_hermitian(Operator(std::move(h)));
}

StateVector random_state(std::size_t dim, Rng &rng) {
    return random_state_on_levels(dim, dim, rng);
}

StateVector random_state_on_levels(std::size_t dim, std::size_t levels, Rng &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < levels && k < dim; ++k) {
        v(static_cast<Eigen::Index>(k)) = {u(rng), u(rng)};
    }
    return normalize(StateVector(std::move(v)));
}

HermitianOperator random_polynomial_of(const HermitianOperator &a, Rng &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Operator a2 = a.op() * a.op();
    const Operator a3 = a2 * a.op();
    const Operator poly = TraceScalar(u(rng)) * Operator::identity(a.dim()) +
                          TraceScalar(u(rng)) * a.op() + TraceScalar(u(rng)) * a2 +
                          TraceScalar(u(rng)) * a3;
    return certify_hermitian(poly);
}

} // namespace qcb
