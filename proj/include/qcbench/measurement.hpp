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
 * Projective measurement with collapse, and ensembles built from repeated
 * prepare-measure-discard cycles.
 *
 * Every sample index i draws from its own stream seeded by (seed, i, lane),
 * so the counts do not depend on the order in which samples are taken.
 * A preparation is a pure recipe; the same system is never measured twice.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "qcbench/operators.hpp"
#include "qcbench/spectral.hpp"
#include "qcbench/state.hpp"

namespace qcb {

/// Probabilities this close to zero are clamped to zero.
inline constexpr double kProbabilityClamp = 1e-12;

/// Per-sample random stream; deterministic across platforms.
class SampleStream {
  public:
    SampleStream(std::uint64_t seed, std::uint64_t index, std::uint32_t lane = 0);

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();

  private:
    std::mt19937_64 engine_;
};

struct BornWeight {
    double eigenvalue;
    double probability;
};

/// One entry per degenerate group, in ascending eigenvalue order.
[[nodiscard]] std::vector<BornWeight> born_probabilities(const SpectralDecomposition &dec,
                                                         const StateVector &psi);

struct MeasurementOutcome {
    double eigenvalue;
    std::size_t group_index;
    StateVector collapsed;
};

/// Draws a group with Born weights and collapses psi onto its eigenspace.
[[nodiscard]] MeasurementOutcome measure_once(const SpectralDecomposition &dec,
                                              const StateVector &psi, SampleStream &stream);

using Preparation = std::function<StateVector()>;

struct EnsembleReport {
    std::map<std::size_t, std::int64_t> counts; ///< group index -> count (nonzero only)
    std::vector<double> group_values;           ///< eigenvalue of every group
    std::int64_t n = 0;
    double empirical_mean = 0.0;
    double empirical_std = 0.0; ///< population standard deviation of the outcomes
    std::uint64_t seed = 0;
    /// Samples whose collapsed state, measured again, gave a different group.
    std::int64_t idempotence_failures = 0;
    std::uint64_t observable_fingerprint = 0;

    friend bool operator==(const EnsembleReport &, const EnsembleReport &) = default;
};

/// Group index of every sample, in sample order.
[[nodiscard]] std::vector<std::size_t> sample_outcomes(const Preparation &prepare,
                                                       const SpectralDecomposition &dec,
                                                       std::int64_t n, std::uint64_t seed);

[[nodiscard]] EnsembleReport repeat_experiment(const Preparation &prepare,
                                               const HermitianOperator &observable,
                                               std::int64_t n, std::uint64_t seed);

/// Same, reusing an existing decomposition of the observable.
[[nodiscard]] EnsembleReport repeat_experiment(const Preparation &prepare,
                                               const SpectralDecomposition &dec,
                                               std::int64_t n, std::uint64_t seed);

struct DensityCell {
    double x;
    double frequency;
};

/// Histogram of position outcomes; throws InputError unless the report came
/// from the position operator of `grid`.
[[nodiscard]] std::vector<DensityCell> reconstruct_density(const EnsembleReport &report,
                                                           const GridMeta &grid);

struct CatReport {
    EnsembleReport ensemble;
    double alpha; ///< <A> in the cat state
    double beta;  ///< dispersion of A in the cat state
};

/// Measures diag(a1, a2) on (|alive> + |dead>)/sqrt(2).
[[nodiscard]] CatReport cat_experiment(double a1, double a2, std::int64_t n, std::uint64_t seed);

/// Two-sided band for the sample standard deviation of a two-point
/// distribution with values a1, a2, each with probability 1/2: the std at
/// p = 1/2 +- k sqrt(p(1-p)/n) subtracted from |a1 - a2| / 2.
[[nodiscard]] double binomial_std_band(double a1, double a2, std::int64_t n, double k = 3.0);

} // namespace qcb
