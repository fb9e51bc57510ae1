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

/**
 * @file
 * Operators, the hermiticity certificate, and expectations in both the
 * complex and the trace (real) scalar product.
 *
 * The trace-form expectation of a commutator of two hermitian operators
 * vanishes on every state:
 *
 *     tr <psi|(AB - BA) psi>_C = 0,
 *
 * which is the sense in which hermitian operators commute with respect to
 * the real scalar product. Off-diagonal matrix elements make no such claim.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "qcbench/state.hpp"
#include "qcbench/trace_scalar.hpp"

namespace qcb {

/// Default relative tolerance of the hermiticity certificate.
inline constexpr double kHermitianTol = 1e-10;
/// Below this, av_decompose reports the state as dispersion-free.
inline constexpr double kDispersionFreeThreshold = 1e-10;
/// Allowed deviation of ||psi||^2 from 1 for expectation values.
inline constexpr double kNormalizationTol = 1e-8;

class Operator {
  public:
    using Matrix = Eigen::MatrixXcd;

    explicit Operator(Matrix entries, std::optional<GridMeta> grid = std::nullopt);

    static Operator identity(std::size_t dim, std::optional<GridMeta> grid = std::nullopt);
    static Operator zero(std::size_t dim, std::optional<GridMeta> grid = std::nullopt);
    static Operator diagonal(std::initializer_list<double> values);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] const Matrix &matrix() const noexcept { return entries_; }
    [[nodiscard]] const std::optional<GridMeta> &grid() const noexcept { return grid_; }
    [[nodiscard]] TraceScalar entry(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    /// Largest entry magnitude.
    [[nodiscard]] double max_abs() const noexcept;

    [[nodiscard]] StateVector apply(const StateVector &psi) const;

    friend Operator operator+(const Operator &a, const Operator &b);
    friend Operator operator-(const Operator &a, const Operator &b);
    friend Operator operator*(const Operator &a, const Operator &b);
    friend Operator operator*(TraceScalar s, const Operator &a);

  private:
    Matrix entries_;
    std::optional<GridMeta> grid_;
};

/// An Operator whose hermiticity certificate passed; obtain via certify_hermitian.
class HermitianOperator {
  public:
    [[nodiscard]] const Operator &op() const noexcept { return op_; }
    [[nodiscard]] const Operator::Matrix &matrix() const noexcept { return op_.matrix(); }
    [[nodiscard]] std::size_t dim() const noexcept { return op_.dim(); }
    [[nodiscard]] const std::optional<GridMeta> &grid() const noexcept { return op_.grid(); }
    /// max |A_jk - conj(A_kj)| measured at certification.
    [[nodiscard]] double certificate() const noexcept { return certificate_; }

    operator const Operator &() const noexcept { return op_; }

  private:
    HermitianOperator(Operator op, double certificate)
        : op_(std::move(op)), certificate_(certificate) {}
    friend HermitianOperator certify_hermitian(const Operator &a, double tol);

    Operator op_;
    double certificate_;
};

[[nodiscard]] Operator adjoint(const Operator &a);

/// max |A_jk - conj(A_kj)|.
[[nodiscard]] double hermiticity_deviation(const Operator &a);

/// Accepts `a` when its deviation is at most tol * (1 + max|A|).
[[nodiscard]] HermitianOperator certify_hermitian(const Operator &a, double tol = kHermitianTol);

/// AB - BA.
[[nodiscard]] Operator commutator(const Operator &a, const Operator &b);

struct SymAntisymSplit {
    HermitianOperator symmetric;     ///< (AB + BA) / 2
    HermitianOperator antisymmetric; ///< (AB - BA) / (2i)
};

/// AB = S + iD with S, D hermitian.
[[nodiscard]] SymAntisymSplit sym_antisym_split(const HermitianOperator &a,
                                                const HermitianOperator &b);

/// Raw sesquilinear form <psi|A psi>_C for any operator; checks dims and grid.
[[nodiscard]] TraceScalar complex_form(const Operator &a, const StateVector &psi);

/// tr <psi|A psi>_C for any operator (the real-scalar-product expectation).
[[nodiscard]] double real_form(const Operator &a, const StateVector &psi);

/**
 * Quantum expectation Re <psi|A psi>_C of a hermitian operator.
 * Throws StateError for a non-normalized psi and NumericalError if the raw
 * form carries an imaginary part larger than rounding allows.
 */
[[nodiscard]] double expect_c(const HermitianOperator &a, const StateVector &psi);

/// Classical (trace-form) expectation; equals 2 * expect_c.
[[nodiscard]] double expect_r(const HermitianOperator &a, const StateVector &psi);

/// sqrt(max(0, <A^2> - <A>^2)) evaluated from complex-form expectations.
/// sqrt(<A^2> - <A>^2), evaluated as the centered moment <(A - <A>)^2>.
[[nodiscard]] double dispersion(const HermitianOperator &a, const StateVector &psi);

struct AvDecomposition {
    double alpha;                          ///< <A>
    double beta;                           ///< dispersion, >= 0
    std::optional<StateVector> orthogonal; ///< present iff beta > kDispersionFreeThreshold
};

/// A psi = alpha psi + beta psi_perp with <psi|psi_perp> = 0.
[[nodiscard]] AvDecomposition av_decompose(const HermitianOperator &a, const StateVector &psi);

/// Content hash of the matrix and grid binding; used to tie results to their source.
[[nodiscard]] std::uint64_t fingerprint(const Operator &a);

} // namespace qcb
