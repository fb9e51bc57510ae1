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

// Random inputs for property checks.

#pragma once

#include <cstddef>
#include <random>

#include "qcbench/operators.hpp"
#include "qcbench/state.hpp"

namespace qcb {

using Rng = std::mt19937_64;

/// Entries uniform in [-scale, scale] (real and imaginary parts), then (M + M^+)/2.
[[nodiscard]] HermitianOperator random_hermitian(std::size_t dim, Rng &rng, double scale = 1.0);

/// Normalized state with uniform random complex coefficients.
[[nodiscard]] StateVector random_state(std::size_t dim, Rng &rng);

/// Normalized state supported only on the first `levels` basis vectors.
[[nodiscard]] StateVector random_state_on_levels(std::size_t dim, std::size_t levels, Rng &rng);

/// c0 I + c1 A + c2 A^2 + c3 A^3 with random real coefficients.
[[nodiscard]] HermitianOperator random_polynomial_of(const HermitianOperator &a, Rng &rng);

} // namespace qcb
