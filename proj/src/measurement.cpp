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

#include "qcbench/measurement.hpp"

#include <cmath>
#include <string>

#include "qcbench/dynamics.hpp"
#include "qcbench/errors.hpp"

namespace qcb {

namespace {

constexpr double kNothingToSample = 1e-14;

void require_matches(const SpectralDecomposition &dec, const StateVector &psi) {
    if (dec.dim() != psi.dim()) {
        throw DimensionError("state of dim " + std::to_string(psi.dim()) +
                             " measured against a decomposition of dim " +
                             std::to_string(dec.dim()));
    }
    if (dec.grid() != psi.grid()) {
        throw GridError("state and observable are bound to different grids");
    }
}

// |<f_k|psi>|^2 for every basis vector.
Eigen::VectorXd component_weights(const SpectralDecomposition &dec, const StateVector &psi) {
    const Eigen::VectorXcd c = dec.basis().adjoint() * psi.amplitudes();
    return psi.weight() * c.cwiseAbs2();
}

std::size_t draw_group(const std::vector<BornWeight> &weights, double u) {
    double total = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t g = 0; g < weights.size(); ++g) {
        total += weights[g].probability;
        if (weights[g].probability > 0.0) {
            last_nonzero = g;
        }
    }
    if (!(total >= kNothingToSample)) {
        throw NumericalError("all outcome probabilities are below 1e-14");
    }
    const double target = u * total;
    double acc = 0.0;
    for (std::size_t g = 0; g < weights.size(); ++g) {
        acc += weights[g].probability;
        if (weights[g].probability > 0.0 && target < acc) {
            return g;
        }
    }
    return last_nonzero; // cumulative rounding lands in the final bucket
}

void tally(EnsembleReport &report) {
    double sum = 0.0;
    for (const auto &[g, c] : report.counts) {
        sum += static_cast<double>(c) * report.group_values[g];
    }
    const double n = static_cast<double>(report.n);
    report.empirical_mean = sum / n;
    double sq = 0.0;
    for (const auto &[g, c] : report.counts) {
        const double d = report.group_values[g] - report.empirical_mean;
        sq += static_cast<double>(c) * d * d;
    }
    report.empirical_std = std::sqrt(sq / n);
}

} // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index, std::uint32_t lane) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      lane};
    engine_.seed(seq);
}

double SampleStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<BornWeight> born_probabilities(const SpectralDecomposition &dec,
                                           const StateVector &psi) {
    require_matches(dec, psi);
    const Eigen::VectorXd w = component_weights(dec, psi);
    std::vector<BornWeight> out;
    out.reserve(dec.groups().size());
    for (std::size_t g = 0; g < dec.groups().size(); ++g) {
        double p = 0.0;
        for (std::size_t k : dec.groups()[g]) {
            p += w(static_cast<Eigen::Index>(k));
        }
        out.push_back({dec.group_value(g), p <= kProbabilityClamp ? 0.0 : p});
    }
    return out;
}

MeasurementOutcome measure_once(const SpectralDecomposition &dec, const StateVector &psi,
                                SampleStream &stream) {
    const std::vector<BornWeight> weights = born_probabilities(dec, psi);
    const std::size_t g = draw_group(weights, stream.uniform());
    // Projection onto span{f_k : k in group}; the grid weight cancels.
    Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(psi.amplitudes().size());
    for (std::size_t k : dec.groups()[g]) {
        const auto col = dec.basis().col(static_cast<Eigen::Index>(k));
        proj += col * col.dot(psi.amplitudes());
    }
    return {weights[g].eigenvalue, g, normalize(StateVector(std::move(proj), psi.grid()))};
}

std::vector<std::size_t> sample_outcomes(const Preparation &prepare,
                                         const SpectralDecomposition &dec, std::int64_t n,
                                         std::uint64_t seed) {
    if (n < 1) {
        throw InputError("number of samples must be at least 1");
    }
    std::vector<std::size_t> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        SampleStream stream(seed, static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] = measure_once(dec, prepare(), stream).group_index;
    }
    return out;
}

EnsembleReport repeat_experiment(const Preparation &prepare, const HermitianOperator &observable,
                                 std::int64_t n, std::uint64_t seed) {
    return repeat_experiment(prepare, eigendecompose(observable), n, seed);
}

EnsembleReport repeat_experiment(const Preparation &prepare, const SpectralDecomposition &dec,
                                 std::int64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw InputError("number of samples must be at least 1");
    }
    EnsembleReport report;
    report.n = n;
    report.seed = seed;
    report.observable_fingerprint = dec.source_fingerprint();
    for (std::size_t g = 0; g < dec.groups().size(); ++g) {
        report.group_values.push_back(dec.group_value(g));
    }
    for (std::int64_t i = 0; i < n; ++i) {
        SampleStream stream(seed, static_cast<std::uint64_t>(i));
        const MeasurementOutcome first = measure_once(dec, prepare(), stream);
        ++report.counts[first.group_index];
        // Collapse check on a separate lane so it never perturbs the main draws.
        SampleStream recheck(seed, static_cast<std::uint64_t>(i), 1);
        if (measure_once(dec, first.collapsed, recheck).group_index != first.group_index) {
            ++report.idempotence_failures;
        }
    }
    tally(report);
    return report;
}

std::vector<DensityCell> reconstruct_density(const EnsembleReport &report, const GridMeta &grid) {
    const HermitianOperator q = position_operator(grid);
    if (report.observable_fingerprint != fingerprint(q.op())) {
        throw InputError("ensemble was not measured with this grid's position operator");
    }
    const SpectralDecomposition dec = eigendecompose(q);
    std::vector<DensityCell> out(grid.points);
    for (std::size_t k = 0; k < grid.points; ++k) {
        out[k].x = grid.position(k);
    }
    // Position eigenvalues are distinct, so each group is one cell; the
    // group's basis vector points at that cell.
    for (const auto &[g, count] : report.counts) {
        const std::size_t k = dec.groups().at(g).front();
        Eigen::Index cell = 0;
        dec.basis().col(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff(&cell);
        out[static_cast<std::size_t>(cell)].frequency +=
            static_cast<double>(count) / static_cast<double>(report.n);
    }
    return out;
}

CatReport cat_experiment(double a1, double a2, std::int64_t n, std::uint64_t seed) {
    if (a1 == a2) {
        throw DegenerateSpectrumError("cat experiment needs two distinct outcomes");
    }
    const HermitianOperator observable = certify_hermitian(Operator::diagonal({a1, a2}));
    const StateVector alive{1.0, 0.0};
    const StateVector dead{0.0, 1.0};
    const double amp = 1.0 / std::sqrt(2.0);
    const std::vector<StateVector> parts{alive, dead};
    const std::vector<TraceScalar> weights{amp, amp};
    const StateVector cat = normalize(superpose(parts, weights));
    const AvDecomposition av = av_decompose(observable, cat);
    const Preparation prepare = [cat] { return cat; };
    return {repeat_experiment(prepare, observable, n, seed), av.alpha, av.beta};
}

double binomial_std_band(double a1, double a2, std::int64_t n, double k) {
    const double sigma_p = std::sqrt(0.25 / static_cast<double>(n));
    const double lo = std::max(0.0, 0.5 - k * sigma_p);
    const double hi = std::min(1.0, 0.5 + k * sigma_p);
    const double spread = std::abs(a1 - a2);
    return spread / 2.0 - spread * std::sqrt(lo * hi);
}

} // namespace qcb
