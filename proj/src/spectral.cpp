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

#include "qcbench/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapack_eigen.hpp"
#include "qcbench/errors.hpp"

namespace qcb {

namespace {

constexpr double kPhaseThreshold = 1e-8;
// Pivot candidates within this relative margin of the best are treated as tied.
constexpr double kPivotTieMargin = 1e-8;

struct CanonicalEigen {
    std::vector<double> values;
    Eigen::MatrixXcd vectors;
    std::vector<std::vector<std::size_t>> groups;
    double tol = 0.0;
};

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > kPhaseThreshold) {
            v *= std::conj(v(i)) / mag;
            v(i) = mag;
            return;
        }
    }
}

std::vector<std::vector<std::size_t>> group_sorted(const std::vector<double> &values, double tol) {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (groups.empty() || values[k] - values[groups.back().back()] > tol) {
            groups.push_back({k});
        } else {
            groups.back().push_back(k);
        }
    }
    return groups;
}

// Rebuilds an orthonormal basis of span(block) that depends only on the span:
// pivot on the standard basis vectors with the largest projection, then
// Gram-Schmidt the chosen projections in ascending pivot order.
Eigen::MatrixXcd canonical_subspace_basis(const Eigen::MatrixXcd &block) {
    const Eigen::Index g = block.cols();
    const Eigen::MatrixXcd coords = block.adjoint(); // column j = coordinates of P e_j
    Eigen::MatrixXcd work = coords;
    std::vector<Eigen::Index> pivots;
    for (Eigen::Index step = 0; step < g; ++step) {
        const Eigen::VectorXd norms = work.colwise().norm();
        const double best = norms.maxCoeff();
        Eigen::Index pick = 0;
        for (Eigen::Index j = 0; j < norms.size(); ++j) {
            if (norms(j) >= best * (1.0 - kPivotTieMargin)) {
                pick = j;
                break;
            }
        }
        pivots.push_back(pick);
        const Eigen::VectorXcd u = work.col(pick) / norms(pick);
        work -= u * (u.adjoint() * work);
    }
    std::sort(pivots.begin(), pivots.end());
    Eigen::MatrixXcd q(g, g);
    for (Eigen::Index c = 0; c < g; ++c) {
        Eigen::VectorXcd v = coords.col(pivots[static_cast<std::size_t>(c)]);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index p = 0; p < c; ++p) {
                v -= q.col(p) * q.col(p).dot(v);
            }
        }
        q.col(c) = v.normalized();
    }
    return block * q;
}

CanonicalEigen canonical_eigen(const Eigen::MatrixXcd &m, std::optional<double> tol_override) {
    detail::RawEigenpairs raw = detail::hermitian_eigenpairs(m);
    CanonicalEigen out;
    out.values.assign(raw.values.data(), raw.values.data() + raw.values.size());
    const double range = out.values.empty() ? 0.0 : out.values.back() - out.values.front();
    out.tol = tol_override.value_or(kGroupTolFactor * std::max(1.0, range));
    out.groups = group_sorted(out.values, out.tol);
    out.vectors = std::move(raw.vectors);
    for (const auto &grp : out.groups) {
        if (grp.size() < 2) {
            continue;
        }
        const auto first = static_cast<Eigen::Index>(grp.front());
        const auto size = static_cast<Eigen::Index>(grp.size());
        out.vectors.middleCols(first, size) =
            canonical_subspace_basis(out.vectors.middleCols(first, size));
    }
    for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
        fix_phase(out.vectors.col(k));
    }
    return out;
}

void require_same_family_space(std::span<const HermitianOperator> family) {
    if (family.empty()) {
        throw InputError("operator family is empty");
    }
    for (const auto &a : family) {
        if (a.dim() != family.front().dim()) {
            throw DimensionError("family members have different dimensions");
        }
        if (a.grid() != family.front().grid()) {
            throw GridError("family members are bound to different grids");
        }
    }
}

} // namespace

StateVector SpectralDecomposition::eigenvector(std::size_t k) const {
    if (k >= dim()) {
        throw DimensionError("eigenvector index " + std::to_string(k) + " out of range");
    }
    const double w = grid_ ? grid_->spacing() : 1.0;
    return StateVector(basis_.col(static_cast<Eigen::Index>(k)) / std::sqrt(w), grid_);
}

std::vector<StateVector> SpectralDecomposition::eigenvectors() const {
    std::vector<StateVector> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        out.push_back(eigenvector(k));
    }
    return out;
}

double SpectralDecomposition::group_value(std::size_t g) const {
    const auto &grp = groups_.at(g);
    double sum = 0.0;
    for (std::size_t k : grp) {
        sum += eigenvalues_[k];
    }
    return sum / static_cast<double>(grp.size());
}

double SpectralDecomposition::spectral_radius() const noexcept {
    double r = 0.0;
    for (double v : eigenvalues_) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

SpectralDecomposition eigendecompose(const HermitianOperator &a) {
    CanonicalEigen ce = canonical_eigen(a.matrix(), std::nullopt);
    SpectralDecomposition dec;
    dec.eigenvalues_ = std::move(ce.values);
    dec.basis_ = std::move(ce.vectors);
    dec.grid_ = a.grid();
    dec.groups_ = std::move(ce.groups);
    dec.group_tol_ = ce.tol;
    dec.group_index_.resize(dec.eigenvalues_.size());
    for (std::size_t g = 0; g < dec.groups_.size(); ++g) {
        for (std::size_t k : dec.groups_[g]) {
            dec.group_index_[k] = g;
        }
    }
    dec.source_ = fingerprint(a.op());
    return dec;
}

double verify_dispersion_free(const SpectralDecomposition &dec, const HermitianOperator &a) {
    if (dec.dim() != a.dim() || dec.grid() != a.grid() ||
        dec.source_fingerprint() != fingerprint(a.op())) {
        throw InputError("decomposition was not produced from this operator");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < dec.dim(); ++k) {
        worst = std::max(worst, dispersion(a, dec.eigenvector(k)));
    }
    return worst;
}

double eigen_residual(const SpectralDecomposition &dec, const HermitianOperator &a) {
    if (dec.dim() != a.dim()) {
        throw DimensionError("decomposition and operator dimensions differ");
    }
    const Eigen::MatrixXcd av = a.matrix() * dec.basis();
    double worst = 0.0;
    for (std::size_t k = 0; k < dec.dim(); ++k) {
        const auto c = static_cast<Eigen::Index>(k);
        worst = std::max(worst, (av.col(c) - dec.eigenvalues()[k] * dec.basis().col(c)).norm());
    }
    return worst;
}

CommutatorReport commutator_report(std::span<const HermitianOperator> family) {
    require_same_family_space(family);
    CommutatorReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const double scale = 1.0 + family[i].op().max_abs() * family[j].op().max_abs();
            const double c = commutator(family[i], family[j]).max_abs() / scale;
            if (c > report.worst) {
                report = {c, i, j};
            }
        }
    }
    return report;
}

bool commute_check(std::span<const HermitianOperator> family, double tol) {
    return commutator_report(family).worst <= tol;
}

StateVector CommonBasis::vector(std::size_t k) const {
    const double w = grid ? grid->spacing() : 1.0;
    return StateVector(basis.col(static_cast<Eigen::Index>(k)) / std::sqrt(w), grid);
}

CommonBasis simultaneous_diagonalize(std::span<const HermitianOperator> family) {
    const CommutatorReport report = commutator_report(family);
    if (report.worst > kCommuteTol) {
        throw NotCommutingError("operators " + std::to_string(report.first) + " and " +
                                    std::to_string(report.second) +
                                    " do not commute (scaled norm " +
                                    std::to_string(report.worst) + ")",
                                report.first, report.second, report.worst);
    }
    const auto n = static_cast<Eigen::Index>(family.front().dim());
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
    // Blocks are contiguous column ranges of q: (first, size).
    std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks{{0, n}};

    for (const auto &a : family) {
        const double tol = kGroupTolFactor * std::max(1.0, 2.0 * a.matrix().norm());
        std::vector<std::pair<Eigen::Index, Eigen::Index>> refined;
        for (const auto &[first, size] : blocks) {
            auto qb = q.middleCols(first, size);
            Eigen::MatrixXcd m = qb.adjoint() * a.matrix() * qb;
            m = 0.5 * (m + m.adjoint()).eval();
            const CanonicalEigen ce = canonical_eigen(m, tol);
            qb = (qb * ce.vectors).eval();
            for (const auto &grp : ce.groups) {
                refined.emplace_back(first + static_cast<Eigen::Index>(grp.front()),
                                     static_cast<Eigen::Index>(grp.size()));
            }
        }
        blocks = std::move(refined);
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        fix_phase(q.col(k));
    }

    CommonBasis out;
    out.grid = family.front().grid();
    out.eigenvalues.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Eigen::MatrixXcd aq = family[i].matrix() * q;
        out.eigenvalues[i].resize(static_cast<std::size_t>(n));
        for (Eigen::Index k = 0; k < n; ++k) {
            out.eigenvalues[i][static_cast<std::size_t>(k)] = q.col(k).dot(aq.col(k)).real();
        }
    }
    for (const auto &[first, size] : blocks) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), static_cast<std::size_t>(first));
        out.blocks.push_back(std::move(idx));
    }
    out.basis = std::move(q);
    return out;
}

GeneratorResult vn_generator(std::span<const HermitianOperator> family) {
    const CommonBasis cb = simultaneous_diagonalize(family);
    const auto n = static_cast<Eigen::Index>(cb.dim());
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
    std::vector<double> labels;
    std::vector<std::map<int, double>> tables(family.size());
    for (std::size_t b = 0; b < cb.blocks.size(); ++b) {
        const int label = static_cast<int>(b);
        labels.push_back(static_cast<double>(label));
        for (std::size_t k : cb.blocks[b]) {
            const auto col = cb.basis.col(static_cast<Eigen::Index>(k));
            r += static_cast<double>(label) * col * col.adjoint();
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
            double sum = 0.0;
            for (std::size_t k : cb.blocks[b]) {
                sum += cb.eigenvalues[i][k];
            }
            tables[i][label] = sum / static_cast<double>(cb.blocks[b].size());
        }
    }
    r = 0.5 * (r + r.adjoint()).eval();
    return {certify_hermitian(Operator(std::move(r), cb.grid)), std::move(labels),
            std::move(tables)};
}

Operator reconstruct_from_generator(const GeneratorResult &gen, std::size_t which) {
    const auto &table = gen.tables.at(which);
    const SpectralDecomposition dec = eigendecompose(gen.generator);
    return apply_function(dec, [&table](double lambda) -> TraceScalar {
        const double rounded = std::round(lambda);
        const auto it = table.find(static_cast<int>(rounded));
        if (std::abs(lambda - rounded) > 0.25 || it == table.end()) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return it->second;
    });
}

Operator apply_function(const SpectralDecomposition &dec,
                        const std::function<TraceScalar(double)> &g) {
    Eigen::VectorXcd values(static_cast<Eigen::Index>(dec.dim()));
    for (std::size_t k = 0; k < dec.dim(); ++k) {
        const TraceScalar v = g(dec.eigenvalues()[k]);
        if (!std::isfinite(v.re()) || !std::isfinite(v.im())) {
            throw FunctionDomainError("function is not finite at eigenvalue " +
                                      std::to_string(dec.eigenvalues()[k]));
        }
        values(static_cast<Eigen::Index>(k)) = v.to_complex();
    }
    Eigen::MatrixXcd m = dec.basis() * values.asDiagonal() * dec.basis().adjoint();
    return Operator(std::move(m), dec.grid());
}

} // namespace qcb
