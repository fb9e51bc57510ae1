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

#include "qcbench/state.hpp"

#include <cmath>
#include <string>

#include "qcbench/errors.hpp"

namespace qcb {

namespace {
constexpr double kDependenceThreshold = 1e-10;
} // namespace

GridMeta GridMeta::make(double length, std::size_t points, double mass, double hbar) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw GridError("grid length must be positive and finite");
    }
    if (points < kMinGridPoints) {
        throw GridError("grid needs at least " + std::to_string(kMinGridPoints) +
                        " interior points, got " + std::to_string(points));
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw GridError("mass must be positive and finite");
    }
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw GridError("hbar must be positive and finite");
    }
    return GridMeta{length, points, mass, hbar, Boundary::dirichlet};
}

StateVector::StateVector(Amplitudes coeffs, std::optional<GridMeta> grid)
    : coeffs_(std::move(coeffs)), grid_(std::move(grid)) {
    if (coeffs_.size() == 0) {
        throw DimensionError("state vector must have positive dimension");
    }
    if (grid_ && grid_->points != dim()) {
        throw GridError("grid has " + std::to_string(grid_->points) +
                        " points but state has dimension " + std::to_string(dim()));
    }
}

StateVector::StateVector(std::initializer_list<TraceScalar> coeffs)
    : StateVector([&] {
          Amplitudes a(static_cast<Eigen::Index>(coeffs.size()));
          Eigen::Index k = 0;
          for (const auto &c : coeffs) {
              a(k++) = c.to_complex();
          }
          return a;
      }()) {}

StateVector StateVector::basis(std::size_t dim, std::size_t k, std::optional<GridMeta> grid) {
    if (k >= dim) {
        throw DimensionError("basis index " + std::to_string(k) + " out of range for dim " +
                             std::to_string(dim));
    }
    Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
    const double w = grid ? grid->spacing() : 1.0;
    a(static_cast<Eigen::Index>(k)) = 1.0 / std::sqrt(w);
    return StateVector(std::move(a), std::move(grid));
}

double StateVector::norm() const noexcept {
    return std::sqrt(weight() * coeffs_.squaredNorm());
}

StateVector StateVector::scaled(TraceScalar factor) const {
    return StateVector(coeffs_ * factor.to_complex(), grid_);
}

void require_compatible(const StateVector &f, const StateVector &g) {
    if (f.dim() != g.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(f.dim()) + " vs " +
                             std::to_string(g.dim()));
    }
    if (f.grid() != g.grid()) {
        throw GridError("states are bound to different grids");
    }
}

TraceScalar complex_inner(const StateVector &f, const StateVector &g) {
    require_compatible(f, g);
    // Eigen's dot() conjugates the left operand.
    return f.weight() * f.amplitudes().dot(g.amplitudes());
}

double real_inner(const StateVector &f, const StateVector &g) {
    return trace(complex_inner(f, g));
}

StateVector normalize(const StateVector &f) {
    const double n = f.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw ZeroVectorError("cannot normalize a zero or non-finite vector");
    }
    return f.scaled(1.0 / n);
}

StateVector superpose(std::span<const StateVector> states, std::span<const TraceScalar> weights) {
    if (states.empty()) {
        throw DimensionError("superpose needs at least one state");
    }
    if (states.size() != weights.size()) {
        throw DimensionError("superpose: " + std::to_string(states.size()) + " states but " +
                             std::to_string(weights.size()) + " weights");
    }
    bool any_nonzero = false;
    for (const auto &w : weights) {
        any_nonzero = any_nonzero || norm_form(w) > 0.0;
    }
    if (!any_nonzero) {
        throw InputError("superpose: all weights are zero");
    }
    StateVector::Amplitudes acc = StateVector::Amplitudes::Zero(
        static_cast<Eigen::Index>(states.front().dim()));
    for (std::size_t k = 0; k < states.size(); ++k) {
        require_compatible(states.front(), states[k]);
        acc += weights[k].to_complex() * states[k].amplitudes();
    }
    return StateVector(std::move(acc), states.front().grid());
}

std::vector<StateVector> gram_schmidt(std::span<const StateVector> states) {
    std::vector<StateVector> out;
    out.reserve(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto &v = states[k];
        if (!out.empty()) {
            require_compatible(out.front(), v);
        }
        StateVector::Amplitudes r = v.amplitudes();
        // Two passes keep the result orthogonal to ~1e-15 for nearly dependent inputs.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : out) {
                const std::complex<double> c = v.weight() * q.amplitudes().dot(r);
                r -= c * q.amplitudes();
            }
        }
        const double residual = std::sqrt(v.weight() * r.squaredNorm());
        if (residual < kDependenceThreshold * std::max(1.0, v.norm())) {
            throw DegenerateSetError("vector " + std::to_string(k) +
                                     " is linearly dependent on its predecessors");
        }
        out.emplace_back(r / residual, v.grid());
    }
    return out;
}

StateVector grid_sample(const std::function<TraceScalar(double)> &profile, const GridMeta &grid) {
    StateVector::Amplitudes a(static_cast<Eigen::Index>(grid.points));
    for (std::size_t k = 0; k < grid.points; ++k) {
        const TraceScalar v = profile(grid.position(k));
        if (!std::isfinite(v.re()) || !std::isfinite(v.im())) {
            throw SamplingError("profile is not finite at x = " +
                                std::to_string(grid.position(k)));
        }
        a(static_cast<Eigen::Index>(k)) = v.to_complex();
    }
    StateVector s(std::move(a), grid);
    if (!(s.norm() > 0.0)) {
        throw SamplingError("profile vanishes at every grid point");
    }
    return normalize(s);
}

} // namespace qcb
