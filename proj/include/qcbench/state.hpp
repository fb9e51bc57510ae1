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
 * State vectors over TraceScalar coefficients, the two inner products on
 * them, and the 1D Dirichlet grid that stands in for position space.
 *
 * Two scalar products are provided:
 *  - complex_inner: <f|g>_C = sum conj(f_k) g_k (times h on a grid)
 *  - real_inner:    <f|g>_R = tr <f|g>_C = 2 Re <f|g>_C
 *
 * The real form keeps tr(1) = 2, so a complex-normalized state has
 * <f|f>_R = kRealFormUnit.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "qcbench/trace_scalar.hpp"

namespace qcb {

/// <f|f>_R for a complex-normalized f, i.e. tr(1).
inline constexpr double kRealFormUnit = 2.0;

enum class Boundary { dirichlet };

/**
 * Uniform interior grid on [0, L] with Dirichlet walls at both ends.
 * Interior points are x_j = j h, j = 1..N, with h = L / (N + 1).
 */
struct GridMeta {
    double length = 1.0;
    std::size_t points = 0;
    double mass = 1.0;
    double hbar = 1.0;
    Boundary boundary = Boundary::dirichlet;

    /// Validating constructor; throws GridError.
    static GridMeta make(double length, std::size_t points, double mass = 1.0,
                         double hbar = 1.0);

    [[nodiscard]] double spacing() const noexcept {
        return length / static_cast<double>(points + 1);
    }
    /// Position of the zero-based interior index `k` (x_{k+1} = (k+1) h).
    [[nodiscard]] double position(std::size_t k) const noexcept {
        return static_cast<double>(k + 1) * spacing();
    }

    friend bool operator==(const GridMeta &, const GridMeta &) = default;
};

inline constexpr std::size_t kMinGridPoints = 8;

/// Immutable coefficient vector, optionally bound to a grid.
class StateVector {
  public:
    using Amplitudes = Eigen::VectorXcd;

    explicit StateVector(Amplitudes coeffs, std::optional<GridMeta> grid = std::nullopt);
    StateVector(std::initializer_list<TraceScalar> coeffs);

    /// Unit vector e_k (normalized with the grid weight when bound).
    static StateVector basis(std::size_t dim, std::size_t k,
                             std::optional<GridMeta> grid = std::nullopt);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(coeffs_.size());
    }
    [[nodiscard]] TraceScalar operator[](std::size_t k) const {
        return coeffs_(static_cast<Eigen::Index>(k));
    }
    [[nodiscard]] const Amplitudes &amplitudes() const noexcept { return coeffs_; }
    [[nodiscard]] const std::optional<GridMeta> &grid() const noexcept { return grid_; }
    /// Quadrature weight: h when grid-bound, 1 otherwise.
    [[nodiscard]] double weight() const noexcept { return grid_ ? grid_->spacing() : 1.0; }
    /// Complex-form norm sqrt(<f|f>_C).
    [[nodiscard]] double norm() const noexcept;

    [[nodiscard]] StateVector scaled(TraceScalar factor) const;

  private:
    Amplitudes coeffs_;
    std::optional<GridMeta> grid_;
};

/// Throws DimensionError / GridError unless f and g live in the same space.
void require_compatible(const StateVector &f, const StateVector &g);

[[nodiscard]] TraceScalar complex_inner(const StateVector &f, const StateVector &g);
[[nodiscard]] double real_inner(const StateVector &f, const StateVector &g);

/// f / ||f||; throws ZeroVectorError on a zero vector.
[[nodiscard]] StateVector normalize(const StateVector &f);

/// sum_k w_k state_k, not normalized.
[[nodiscard]] StateVector superpose(std::span<const StateVector> states,
                                    std::span<const TraceScalar> weights);

/// Classical Gram-Schmidt with re-orthogonalization; throws DegenerateSetError.
[[nodiscard]] std::vector<StateVector> gram_schmidt(std::span<const StateVector> states);

/// Samples `profile` at the interior points and normalizes with weight h.
[[nodiscard]] StateVector grid_sample(const std::function<TraceScalar(double)> &profile,
                                      const GridMeta &grid);

} // namespace qcb
