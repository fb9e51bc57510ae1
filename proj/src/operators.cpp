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

#include "qcbench/operators.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <string_view>

#include "qcbench/errors.hpp"

namespace qcb {

namespace {

void require_same_space(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    if (a.grid() != b.grid()) {
        throw GridError("operators are bound to different grids");
    }
}

void require_acts_on(const Operator &a, const StateVector &psi) {
    if (a.dim() != psi.dim()) {
        throw DimensionError("operator of dim " + std::to_string(a.dim()) +
                             " applied to state of dim " + std::to_string(psi.dim()));
    }
    if (a.grid() != psi.grid()) {
        throw GridError("operator and state are bound to different grids");
    }
}

void require_normalized(const StateVector &psi) {
    const double n2 = psi.norm() * psi.norm();
    if (!(std::abs(n2 - 1.0) <= kNormalizationTol)) {
        throw StateError("state is not normalized: <psi|psi> = " + std::to_string(n2));
    }
}

} // namespace

Operator::Operator(Matrix entries, std::optional<GridMeta> grid)
    : entries_(std::move(entries)), grid_(std::move(grid)) {
    if (entries_.rows() != entries_.cols()) {
        throw DimensionError("operator must be square, got " + std::to_string(entries_.rows()) +
                             "x" + std::to_string(entries_.cols()));
    }
    if (entries_.rows() == 0) {
        throw DimensionError("operator must have positive dimension");
    }
    if (grid_ && grid_->points != dim()) {
        throw GridError("grid has " + std::to_string(grid_->points) +
                        " points but operator has dimension " + std::to_string(dim()));
    }
}

Operator Operator::identity(std::size_t dim, std::optional<GridMeta> grid) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Identity(n, n), std::move(grid));
}

Operator Operator::zero(std::size_t dim, std::optional<GridMeta> grid) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Zero(n, n), std::move(grid));
}

Operator Operator::diagonal(std::initializer_list<double> values) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(values.size()));
    Eigen::Index k = 0;
    for (double v : values) {
        d(k++) = v;
    }
    return Operator(d.asDiagonal());
}

double Operator::max_abs() const noexcept { return entries_.cwiseAbs().maxCoeff(); }

StateVector Operator::apply(const StateVector &psi) const {
    require_acts_on(*this, psi);
    return StateVector(entries_ * psi.amplitudes(), psi.grid());
}

Operator operator+(const Operator &a, const Operator &b) {
    require_same_space(a, b);
    return Operator(a.entries_ + b.entries_, a.grid_);
}

Operator operator-(const Operator &a, const Operator &b) {
    require_same_space(a, b);
    return Operator(a.entries_ - b.entries_, a.grid_);
}

Operator operator*(const Operator &a, const Operator &b) {
    require_same_space(a, b);
    return Operator(a.entries_ * b.entries_, a.grid_);
}

Operator operator*(TraceScalar s, const Operator &a) {
    return Operator(s.to_complex() * a.entries_, a.grid_);
}

Operator adjoint(const Operator &a) { return Operator(a.matrix().adjoint(), a.grid()); }

double hermiticity_deviation(const Operator &a) {
    return (a.matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator certify_hermitian(const Operator &a, double tol) {
    if (!(tol > 0.0)) {
        throw InputError("certify_hermitian: tolerance must be positive");
    }
    const double dev = hermiticity_deviation(a);
    if (!(dev <= tol * (1.0 + a.max_abs()))) {
        throw NotHermitianError("operator is not hermitian: max |A - A^+| = " +
                                    std::to_string(dev),
                                dev);
    }
    return HermitianOperator(a, dev);
}

Operator commutator(const Operator &a, const Operator &b) { return a * b - b * a; }

SymAntisymSplit sym_antisym_split(const HermitianOperator &a, const HermitianOperator &b) {
    const Operator ab = a.op() * b.op();
    const Operator ba = b.op() * a.op();
    const Operator s = TraceScalar(0.5) * (ab + ba);
    // (AB - BA) / (2i) = -i (AB - BA) / 2
    const Operator d = TraceScalar(0.0, -0.5) * (ab - ba);
    return {certify_hermitian(s), certify_hermitian(d)};
}

TraceScalar complex_form(const Operator &a, const StateVector &psi) {
    require_acts_on(a, psi);
    return psi.weight() * psi.amplitudes().dot(a.matrix() * psi.amplitudes());
}

double real_form(const Operator &a, const StateVector &psi) {
    return trace(complex_form(a, psi));
}

double expect_c(const HermitianOperator &a, const StateVector &psi) {
    require_acts_on(a.op(), psi);
    require_normalized(psi);
    const Eigen::VectorXcd a_psi = a.matrix() * psi.amplitudes();
    const std::complex<double> raw = psi.weight() * psi.amplitudes().dot(a_psi);
    // Cauchy-Schwarz bound on |<psi|A psi>| sets the rounding scale.
    const double scale = 1.0 + psi.weight() * a_psi.norm() * psi.amplitudes().norm();
    if (!(std::abs(raw.imag()) <= 1e-10 * scale)) {
        throw NumericalError("hermitian expectation has imaginary part " +
                             std::to_string(raw.imag()));
    }
    return raw.real();
}

double expect_r(const HermitianOperator &a, const StateVector &psi) {
    return trace(TraceScalar(expect_c(a, psi)));
}

double dispersion(const HermitianOperator &a, const StateVector &psi) {
    const double mean = expect_c(a, psi);
    // <A^2> - <A>^2 evaluated as the centered moment <(A - <A>)^2>, which
    // avoids cancellation when psi is close to an eigenvector.
    const Eigen::VectorXcd a_psi = a.matrix() * psi.amplitudes();
    double centered = 0.0;
    for (Eigen::Index k = 0; k < a_psi.size(); ++k) {
        centered += std::norm(a_psi(k) - mean * psi.amplitudes()(k));
    }
    return std::sqrt(std::max(0.0, psi.weight() * centered));
}

AvDecomposition av_decompose(const HermitianOperator &a, const StateVector &psi) {
    const double alpha = expect_c(a, psi);
    // beta = ||A psi - alpha psi||; the residual doubles as psi_perp.
    const Eigen::VectorXcd residual = a.matrix() * psi.amplitudes() - alpha * psi.amplitudes();
    const double beta = std::sqrt(psi.weight() * residual.squaredNorm());
    if (beta <= kDispersionFreeThreshold) {
        return {alpha, beta, std::nullopt};
    }
    return {alpha, beta, StateVector(residual / beta, psi.grid())};
}

std::uint64_t fingerprint(const Operator &a) {
    const auto &m = a.matrix();
    const std::string_view bytes(reinterpret_cast<const char *>(m.data()),
                                 static_cast<std::size_t>(m.size()) * sizeof(m(0, 0)));
    std::uint64_t h = std::hash<std::string_view>{}(bytes);
    if (a.grid()) {
        const auto &g = *a.grid();
        const std::uint64_t gh = std::hash<double>{}(g.length) ^
                                 (std::hash<std::size_t>{}(g.points) << 1) ^
                                 (std::hash<double>{}(g.mass) << 2) ^
                                 (std::hash<double>{}(g.hbar) << 3);
        h ^= gh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace qcb
