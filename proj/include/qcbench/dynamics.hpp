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
 * Model Hamiltonians and the two equivalent forms of the equations of motion.
 *
 * Classical side: polynomial observables in (q, p) and their Poisson bracket
 *
 *     {A, H} = dA/dq dH/dp - dA/dp dH/dq.
 *
 * Quantum side: the Heisenberg right-hand side (i/hbar)(HA - AH).
 *
 * eq3_check quantizes the classical bracket with Weyl ordering and compares
 * its expectation with that of the Heisenberg right-hand side on one state.
 * For quadratic H and observables of degree <= 2 the two agree exactly.
 */

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcbench/operators.hpp"
#include "qcbench/spectral.hpp"
#include "qcbench/state.hpp"

namespace qcb {

inline constexpr int kMaxPolynomialDegree = 6;
/// Largest tolerated occupation of the top ladder level in eq3_check.
inline constexpr double kTruncationGuard = 1e-6;

/// Finite real polynomial sum c_ab q^a p^b of total degree <= 6.
class PolynomialObservable {
  public:
    using Powers = std::pair<int, int>; // (q power, p power)

    PolynomialObservable() = default;
    /// Throws DegreeError above kMaxPolynomialDegree, InputError on non-finite coefficients.
    explicit PolynomialObservable(std::map<Powers, double> monomials);

    static PolynomialObservable constant(double c);
    static PolynomialObservable monomial(int q_power, int p_power, double coefficient = 1.0);
    static PolynomialObservable q() { return monomial(1, 0); }
    static PolynomialObservable p() { return monomial(0, 1); }
    /// p^2 / 2m + m omega^2 q^2 / 2.
    static PolynomialObservable oscillator_hamiltonian(double mass, double omega);

    [[nodiscard]] const std::map<Powers, double> &monomials() const noexcept { return terms_; }
    [[nodiscard]] int degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] double coefficient(int q_power, int p_power) const;

    [[nodiscard]] PolynomialObservable derivative_q() const;
    [[nodiscard]] PolynomialObservable derivative_p() const;

    friend PolynomialObservable operator+(const PolynomialObservable &a,
                                          const PolynomialObservable &b);
    friend PolynomialObservable operator-(const PolynomialObservable &a,
                                          const PolynomialObservable &b);
    friend PolynomialObservable operator*(const PolynomialObservable &a,
                                          const PolynomialObservable &b);
    friend PolynomialObservable operator*(double s, const PolynomialObservable &a);
    friend bool operator==(const PolynomialObservable &, const PolynomialObservable &) = default;

  private:
    std::map<Powers, double> terms_;
};

enum class ModelKind { grid_well, grid_free, oscillator_ladder };
enum class Potential { infinite_well, free };

struct ModelParams {
    double mass = 1.0;
    double hbar = 1.0;
    std::optional<double> omega;  ///< oscillator only
    std::optional<double> length; ///< grid models only
};

/// q, p, H of one model. Immutable; the spectral decomposition of H is cached.
class ModelSystem {
  public:
    ModelSystem(ModelKind kind, HermitianOperator q, HermitianOperator p, HermitianOperator h,
                ModelParams params);

    [[nodiscard]] ModelKind kind() const noexcept { return kind_; }
    [[nodiscard]] const HermitianOperator &q() const noexcept { return q_; }
    [[nodiscard]] const HermitianOperator &p() const noexcept { return p_; }
    [[nodiscard]] const HermitianOperator &hamiltonian() const noexcept { return h_; }
    [[nodiscard]] const ModelParams &params() const noexcept { return params_; }
    [[nodiscard]] std::size_t dim() const noexcept { return h_.dim(); }
    [[nodiscard]] const std::optional<GridMeta> &grid() const noexcept { return h_.grid(); }

    /// Eigendecomposition of H, computed once on first use; thread-safe.
    [[nodiscard]] const SpectralDecomposition &energy_basis() const;

  private:
    struct Cache;

    ModelKind kind_;
    HermitianOperator q_;
    HermitianOperator p_;
    HermitianOperator h_;
    ModelParams params_;
    std::shared_ptr<Cache> cache_;
};

/// Position operator diag(x_j) of a grid.
[[nodiscard]] HermitianOperator position_operator(const GridMeta &grid);

/**
 * Central-difference momentum and three-point kinetic energy on a Dirichlet
 * grid. The potential is zero inside the box for both kinds; `free` only
 * labels the intent (valid until the packet reaches a wall).
 */
[[nodiscard]] ModelSystem build_grid_model(const GridMeta &grid, Potential potential);

/// Truncated ladder model of dimension d >= 4.
[[nodiscard]] ModelSystem build_oscillator_ladder(std::size_t d, double mass, double omega,
                                                  double hbar);

/// Formal Poisson bracket {A, H}.
[[nodiscard]] PolynomialObservable poisson_rhs_classical(const PolynomialObservable &a,
                                                         const PolynomialObservable &h);

/// Weyl-ordered substitution q -> model.q, p -> model.p.
[[nodiscard]] HermitianOperator quantize(const PolynomialObservable &a, const ModelSystem &model);

/// (i/hbar)(HA - AH).
[[nodiscard]] HermitianOperator heisenberg_rhs(const HermitianOperator &h,
                                               const HermitianOperator &a, double hbar);

struct Eq3Result {
    double lhs; ///< <psi| Weyl({A, H}) |psi>
    double rhs; ///< <psi| (i/hbar)[H, A] |psi>
    double gap; ///< |lhs - rhs|
};

/// Both sides on the same state; throws TruncationError near the ladder edge.
[[nodiscard]] Eq3Result eq3_check(const PolynomialObservable &a, const PolynomialObservable &h,
                                  const ModelSystem &model, const StateVector &psi);

/// U(t) = exp(-i H t / hbar) as an explicit matrix.
[[nodiscard]] Operator propagator(const ModelSystem &model, double t);

/// U(t) psi0, evaluated in the energy basis.
[[nodiscard]] StateVector evolve_state(const ModelSystem &model, const StateVector &psi0, double t);

/// U(t)^+ A U(t).
[[nodiscard]] HermitianOperator evolve_operator(const ModelSystem &model,
                                                const HermitianOperator &a, double t);

struct SpreadPoint {
    double t;
    double dx;            ///< dispersion of q in psi(t)
    double edge_fraction; ///< max |psi| at the outermost grid points over max |psi|
};

/// Delta x(t) for ascending, nonnegative times; throws InputError otherwise.
[[nodiscard]] std::vector<SpreadPoint> spread_series(const ModelSystem &model,
                                                     const StateVector &psi0,
                                                     std::span<const double> times);

/// Closed-form width of a free minimal Gaussian: sigma0 sqrt(1 + (hbar t / 2 m sigma0^2)^2).
[[nodiscard]] double free_packet_width(double sigma0, double t, double mass, double hbar);

/// n^2 pi^2 hbar^2 / (2 m L^2).
[[nodiscard]] double well_level(int n, double length, double mass, double hbar);

} // namespace qcb
