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

#include "qcbench/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "qcbench/errors.hpp"

namespace qcb {

namespace {

using Matrix = Eigen::MatrixXcd;

// Certifies a matrix produced by products whose rounding scales with `scale`
// rather than with the (possibly tiny) result.
HermitianOperator certify_scaled(const Operator &a, double scale) {
    const double tol = kHermitianTol * (1.0 + scale) / (1.0 + a.max_abs());
    return certify_hermitian(a, std::max(tol, kHermitianTol));
}

void require_degree(const std::map<PolynomialObservable::Powers, double> &terms) {
    for (const auto &[powers, c] : terms) {
        if (powers.first < 0 || powers.second < 0) {
            throw InputError("negative power in polynomial observable");
        }
        if (powers.first + powers.second > kMaxPolynomialDegree) {
            throw DegreeError("monomial degree " + std::to_string(powers.first + powers.second) +
                              " exceeds the cap of " + std::to_string(kMaxPolynomialDegree));
        }
        if (!std::isfinite(c)) {
            throw InputError("polynomial coefficient is not finite");
        }
    }
}

std::map<PolynomialObservable::Powers, double> drop_zeros(
    std::map<PolynomialObservable::Powers, double> terms) {
    std::erase_if(terms, [](const auto &kv) { return kv.second == 0.0; });
    return terms;
}

} // namespace

// --- PolynomialObservable -------------------------------------------------

PolynomialObservable::PolynomialObservable(std::map<Powers, double> monomials)
    : terms_(drop_zeros(std::move(monomials))) {
    require_degree(terms_);
}

PolynomialObservable PolynomialObservable::constant(double c) {
    return PolynomialObservable({{{0, 0}, c}});
}

PolynomialObservable PolynomialObservable::monomial(int q_power, int p_power, double coefficient) {
    return PolynomialObservable({{{q_power, p_power}, coefficient}});
}

PolynomialObservable PolynomialObservable::oscillator_hamiltonian(double mass, double omega) {
    if (!(mass > 0.0) || !(omega > 0.0)) {
        throw InputError("oscillator needs positive mass and omega");
    }
    return PolynomialObservable({{{0, 2}, 0.5 / mass}, {{2, 0}, 0.5 * mass * omega * omega}});
}

int PolynomialObservable::degree() const noexcept {
    int d = 0;
    for (const auto &[powers, c] : terms_) {
        d = std::max(d, powers.first + powers.second);
    }
    return d;
}

double PolynomialObservable::coefficient(int q_power, int p_power) const {
    const auto it = terms_.find({q_power, p_power});
    return it == terms_.end() ? 0.0 : it->second;
}

PolynomialObservable PolynomialObservable::derivative_q() const {
    std::map<Powers, double> out;
    for (const auto &[powers, c] : terms_) {
        if (powers.first > 0) {
            out[{powers.first - 1, powers.second}] += c * powers.first;
        }
    }
    return PolynomialObservable(std::move(out));
}

PolynomialObservable PolynomialObservable::derivative_p() const {
    std::map<Powers, double> out;
    for (const auto &[powers, c] : terms_) {
        if (powers.second > 0) {
            out[{powers.first, powers.second - 1}] += c * powers.second;
        }
    }
    return PolynomialObservable(std::move(out));
}

PolynomialObservable operator+(const PolynomialObservable &a, const PolynomialObservable &b) {
    auto out = a.terms_;
    for (const auto &[powers, c] : b.terms_) {
        out[powers] += c;
    }
    return PolynomialObservable(std::move(out));
}

PolynomialObservable operator-(const PolynomialObservable &a, const PolynomialObservable &b) {
    return a + (-1.0) * b;
}

PolynomialObservable operator*(const PolynomialObservable &a, const PolynomialObservable &b) {
    std::map<PolynomialObservable::Powers, double> out;
    for (const auto &[pa, ca] : a.terms_) {
        for (const auto &[pb, cb] : b.terms_) {
            out[{pa.first + pb.first, pa.second + pb.second}] += ca * cb;
        }
    }
    return PolynomialObservable(std::move(out));
}

PolynomialObservable operator*(double s, const PolynomialObservable &a) {
    auto out = a.terms_;
    for (auto &[powers, c] : out) {
        c *= s;
    }
    return PolynomialObservable(std::move(out));
}

// --- ModelSystem ----------------------------------------------------------

struct ModelSystem::Cache {
    std::once_flag once;
    std::optional<SpectralDecomposition> energy;
};

ModelSystem::ModelSystem(ModelKind kind, HermitianOperator q, HermitianOperator p,
                         HermitianOperator h, ModelParams params)
    : kind_(kind), q_(std::move(q)), p_(std::move(p)), h_(std::move(h)),
      params_(std::move(params)), cache_(std::make_shared<Cache>()) {
    if (q_.dim() != h_.dim() || p_.dim() != h_.dim()) {
        throw DimensionError("model operators have different dimensions");
    }
    if (!(params_.mass > 0.0) || !(params_.hbar > 0.0)) {
        throw InputError("model needs positive mass and hbar");
    }
}

const SpectralDecomposition &ModelSystem::energy_basis() const {
    std::call_once(cache_->once, [this] { cache_->energy = eigendecompose(h_); });
    return *cache_->energy;
}

HermitianOperator position_operator(const GridMeta &grid) {
    const auto n = static_cast<Eigen::Index>(grid.points);
    Eigen::VectorXcd x(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        x(k) = grid.position(static_cast<std::size_t>(k));
    }
    return certify_hermitian(Operator(Matrix(x.asDiagonal()), grid));
}

ModelSystem build_grid_model(const GridMeta &grid, Potential potential) {
    // Re-validate: a GridMeta may have been filled in by hand.
    const GridMeta g = GridMeta::make(grid.length, grid.points, grid.mass, grid.hbar);
    const auto n = static_cast<Eigen::Index>(g.points);
    const double h = g.spacing();
    const double hbar = g.hbar;

    Matrix p = Matrix::Zero(n, n);
    const std::complex<double> hop(0.0, -hbar / (2.0 * h));
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        p(j, j + 1) = hop;
        p(j + 1, j) = std::conj(hop);
    }

    Matrix kinetic = Matrix::Zero(n, n);
    const double t = hbar * hbar / (2.0 * g.mass * h * h);
    for (Eigen::Index j = 0; j < n; ++j) {
        kinetic(j, j) = 2.0 * t;
        if (j + 1 < n) {
            kinetic(j, j + 1) = -t;
            kinetic(j + 1, j) = -t;
        }
    }

    const ModelKind kind =
        potential == Potential::infinite_well ? ModelKind::grid_well : ModelKind::grid_free;
    return ModelSystem(kind, position_operator(g), certify_hermitian(Operator(std::move(p), g)),
                       certify_hermitian(Operator(std::move(kinetic), g)),
                       ModelParams{g.mass, g.hbar, std::nullopt, g.length});
}

ModelSystem build_oscillator_ladder(std::size_t d, double mass, double omega, double hbar) {
    if (d < 4) {
        throw InputError("ladder model needs d >= 4, got " + std::to_string(d));
    }
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
        throw InputError("ladder model needs positive mass, omega and hbar");
    }
    const auto n = static_cast<Eigen::Index>(d);
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    const Matrix ad = a.adjoint();
    const Matrix q = std::sqrt(hbar / (2.0 * mass * omega)) * (a + ad);
    const Matrix p = std::complex<double>(0.0, std::sqrt(mass * omega * hbar / 2.0)) * (ad - a);
    const Matrix h = p * p / (2.0 * mass) + 0.5 * mass * omega * omega * q * q;
    return ModelSystem(ModelKind::oscillator_ladder, certify_hermitian(Operator(q)),
                       certify_hermitian(Operator(p)), certify_hermitian(Operator(h)),
                       ModelParams{mass, hbar, omega, std::nullopt});
}

// --- Equations of motion --------------------------------------------------

PolynomialObservable poisson_rhs_classical(const PolynomialObservable &a,
                                           const PolynomialObservable &h) {
    return a.derivative_q() * h.derivative_p() - a.derivative_p() * h.derivative_q();
}

HermitianOperator quantize(const PolynomialObservable &a, const ModelSystem &model) {
    const auto n = static_cast<Eigen::Index>(model.dim());
    const Matrix &q = model.q().matrix();
    const Matrix &p = model.p().matrix();
    Matrix out = Matrix::Zero(n, n);
    double scale = 0.0;
    for (const auto &[powers, c] : a.monomials()) {
        const auto [qa, pb] = powers;
        // Weyl ordering: average over every distinct arrangement of the factors.
        std::vector<int> word(static_cast<std::size_t>(qa), 0);
        word.insert(word.end(), static_cast<std::size_t>(pb), 1);
        Matrix sym = Matrix::Zero(n, n);
        int arrangements = 0;
        do {
            Matrix prod = Matrix::Identity(n, n);
            for (int letter : word) {
                prod = (prod * (letter == 0 ? q : p)).eval();
            }
            sym += prod;
            ++arrangements;
        } while (std::next_permutation(word.begin(), word.end()));
        out += (c / arrangements) * sym;
        scale += std::abs(c) * std::pow(model.q().op().max_abs(), qa) *
                 std::pow(model.p().op().max_abs(), pb);
    }
    return certify_scaled(Operator(std::move(out), model.grid()), scale);
}

HermitianOperator heisenberg_rhs(const HermitianOperator &h, const HermitianOperator &a,
                                 double hbar) {
    if (!(hbar > 0.0)) {
        throw InputError("hbar must be positive");
    }
    const Operator c = TraceScalar(0.0, 1.0 / hbar) * commutator(h, a);
    return certify_scaled(c, h.op().max_abs() * a.op().max_abs() / hbar);
}

Eq3Result eq3_check(const PolynomialObservable &a, const PolynomialObservable &h,
                    const ModelSystem &model, const StateVector &psi) {
    if (model.kind() == ModelKind::oscillator_ladder) {
        const double top = std::norm(psi.amplitudes()(psi.amplitudes().size() - 1));
        if (top > kTruncationGuard) {
            throw TruncationError("top ladder level occupation " + std::to_string(top) +
                                  " exceeds " + std::to_string(kTruncationGuard));
        }
    }
    const double lhs = expect_c(quantize(poisson_rhs_classical(a, h), model), psi);
    const double rhs =
        expect_c(heisenberg_rhs(quantize(h, model), quantize(a, model), model.params().hbar), psi);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

// --- Time evolution -------------------------------------------------------

Operator propagator(const ModelSystem &model, double t) {
    const double hbar = model.params().hbar;
    return apply_function(model.energy_basis(), [t, hbar](double e) -> TraceScalar {
        return std::polar(1.0, -e * t / hbar);
    });
}

StateVector evolve_state(const ModelSystem &model, const StateVector &psi0, double t) {
    if (psi0.dim() != model.dim() || psi0.grid() != model.grid()) {
        throw DimensionError("state does not live in the model's space");
    }
    const SpectralDecomposition &dec = model.energy_basis();
    Eigen::VectorXcd c = dec.basis().adjoint() * psi0.amplitudes();
    const double hbar = model.params().hbar;
    for (std::size_t k = 0; k < dec.dim(); ++k) {
        c(static_cast<Eigen::Index>(k)) *= std::polar(1.0, -dec.eigenvalues()[k] * t / hbar);
    }
    return StateVector(dec.basis() * c, psi0.grid());
}

HermitianOperator evolve_operator(const ModelSystem &model, const HermitianOperator &a, double t) {
    const Operator u = propagator(model, t);
    const Operator out = adjoint(u) * a.op() * u;
    return certify_scaled(out, a.op().max_abs() * static_cast<double>(a.dim()));
}

std::vector<SpreadPoint> spread_series(const ModelSystem &model, const StateVector &psi0,
                                       std::span<const double> times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] >= 0.0) || (k > 0 && times[k] < times[k - 1])) {
            throw InputError("times must be nonnegative and ascending");
        }
    }
    std::vector<SpreadPoint> out;
    out.reserve(times.size());
    for (double t : times) {
        const StateVector psi = evolve_state(model, psi0, t);
        const auto &v = psi.amplitudes();
        const double peak = v.cwiseAbs().maxCoeff();
        const double edge = std::max(std::abs(v(0)), std::abs(v(v.size() - 1)));
        out.push_back({t, dispersion(model.q(), psi), peak > 0.0 ? edge / peak : 0.0});
    }
    return out;
}

double free_packet_width(double sigma0, double t, double mass, double hbar) {
    const double r = hbar * t / (2.0 * mass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
}

double well_level(int n, double length, double mass, double hbar) {
    const double k = n * std::numbers::pi / length;
    return hbar * hbar * k * k / (2.0 * mass);
}

} // namespace qcb
