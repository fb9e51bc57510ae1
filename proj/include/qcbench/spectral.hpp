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
 * Spectral decomposition of hermitian operators and the constructions built
 * on it: dispersion-free basis verification, simultaneous diagonalization
 * of commuting families, the single-generator construction, and functions
 * of an operator.
 *
 * Output is canonical so that repeated runs agree bit for bit:
 *  - eigenvalues ascending;
 *  - inside a degenerate group the basis is rebuilt from the projector by
 *    pivoting on standard basis vectors, then Gram-Schmidt in ascending
 *    order of the pivot ("dominant") index;
 *  - the first component of magnitude > 1e-8 of every vector is made real
 *    and positive.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "qcbench/operators.hpp"
#include "qcbench/state.hpp"

namespace qcb {

/// Relative factor for degeneracy grouping: tol = 1e-8 * max(1, range).
inline constexpr double kGroupTolFactor = 1e-8;
/// Pairwise commutator bound used before simultaneous diagonalization.
inline constexpr double kCommuteTol = 1e-8;

class SpectralDecomposition {
  public:
    [[nodiscard]] std::size_t dim() const noexcept { return eigenvalues_.size(); }
    [[nodiscard]] const std::vector<double> &eigenvalues() const noexcept { return eigenvalues_; }
    /// Columns are orthonormal in the plain (unweighted) sense.
    [[nodiscard]] const Eigen::MatrixXcd &basis() const noexcept { return basis_; }
    [[nodiscard]] const std::optional<GridMeta> &grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>> &groups() const noexcept {
        return groups_;
    }
    [[nodiscard]] double group_tol() const noexcept { return group_tol_; }
    [[nodiscard]] std::uint64_t source_fingerprint() const noexcept { return source_; }

    /// f_k as a state normalized in the complex form (h-weighted on a grid).
    [[nodiscard]] StateVector eigenvector(std::size_t k) const;
    [[nodiscard]] std::vector<StateVector> eigenvectors() const;
    /// Index of the group holding eigenvector k.
    [[nodiscard]] std::size_t group_of(std::size_t k) const { return group_index_.at(k); }
    /// Representative (mean) eigenvalue of group g.
    [[nodiscard]] double group_value(std::size_t g) const;
    [[nodiscard]] double spectral_radius() const noexcept;

  private:
    friend SpectralDecomposition eigendecompose(const HermitianOperator &a);

    std::vector<double> eigenvalues_;
    Eigen::MatrixXcd basis_;
    std::optional<GridMeta> grid_;
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<std::size_t> group_index_;
    double group_tol_ = 0.0;
    std::uint64_t source_ = 0;
};

[[nodiscard]] SpectralDecomposition eigendecompose(const HermitianOperator &a);

/// max_k dispersion(A, f_k); throws InputError if `dec` was not produced from `a`.
[[nodiscard]] double verify_dispersion_free(const SpectralDecomposition &dec,
                                            const HermitianOperator &a);

/// max_k ||A f_k - lambda_k f_k|| in the unweighted norm of the basis columns.
[[nodiscard]] double eigen_residual(const SpectralDecomposition &dec, const HermitianOperator &a);

struct CommutatorReport {
    double worst = 0.0; ///< max entry of the worst commutator, divided by its scale
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Worst scaled commutator over all pairs; scale = 1 + max|A| * max|B|.
[[nodiscard]] CommutatorReport commutator_report(std::span<const HermitianOperator> family);

[[nodiscard]] bool commute_check(std::span<const HermitianOperator> family, double tol);

/// Common orthonormal eigenbasis of a commuting family.
struct CommonBasis {
    Eigen::MatrixXcd basis;                      ///< orthonormal columns
    std::optional<GridMeta> grid;
    std::vector<std::vector<double>> eigenvalues; ///< [operator][basis vector]
    /// Joint eigenspaces in lexicographic order of their eigenvalue tuples.
    std::vector<std::vector<std::size_t>> blocks;

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(basis.cols());
    }
    [[nodiscard]] StateVector vector(std::size_t k) const;
};

/// Sequential refinement; throws NotCommutingError if the family fails kCommuteTol.
[[nodiscard]] CommonBasis simultaneous_diagonalize(std::span<const HermitianOperator> family);

struct GeneratorResult {
    HermitianOperator generator;              ///< R = sum_label label * P_label
    std::vector<double> labels;               ///< 0, 1, 2, ...
    std::vector<std::map<int, double>> tables; ///< per input operator: label -> eigenvalue
};

[[nodiscard]] GeneratorResult vn_generator(std::span<const HermitianOperator> family);

/// table_A(R): decomposes R and maps each of its eigenvalues through the table.
[[nodiscard]] Operator reconstruct_from_generator(const GeneratorResult &gen, std::size_t which);

/// sum_k g(lambda_k) |f_k><f_k|; throws FunctionDomainError on non-finite values.
[[nodiscard]] Operator apply_function(const SpectralDecomposition &dec,
                                      const std::function<TraceScalar(double)> &g);

} // namespace qcb
