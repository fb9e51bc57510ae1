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

#include <cmath>
#include <numbers>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qcbench/dynamics.hpp"
#include "qcbench/errors.hpp"
#include "qcbench/random.hpp"
#include "test_support.hpp"

using namespace qcb;
using qcb::test::I;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using Poly = PolynomialObservable;

namespace {

// Interior (d-1)x(d-1) block, where truncation has no effect on [q, p].
Eigen::MatrixXcd interior(const Eigen::MatrixXcd &m) {
    return m.topLeftCorner(m.rows() - 1, m.cols() - 1);
}

StateVector low_level_state(std::size_t d, std::size_t levels, Rng &rng) {
    return random_state_on_levels(d, levels, rng);
}

StateVector centered_packet(const GridMeta &grid, double sigma) {
    const double c = grid.length / 2.0;
    return grid_sample(
        [&](double x) { return TraceScalar(std::exp(-(x - c) * (x - c) / (4.0 * sigma * sigma))); },
        grid);
}

} // namespace

TEST_CASE("polynomial algebra", "[dynamics]") {
    const Poly q = Poly::q();
    const Poly p = Poly::p();
    CHECK((q * p).coefficient(1, 1) == 1.0);
    CHECK((q * q - q * q).is_zero());
    CHECK((3.0 * q + p).degree() == 1);
    CHECK((q * q * p).derivative_q() == 2.0 * (q * p));
    CHECK((q * q * p).derivative_p() == q * q);
    CHECK(Poly::constant(4.0).derivative_q().is_zero());

    const Poly h = Poly::oscillator_hamiltonian(2.0, 3.0);
    CHECK(h.coefficient(0, 2) == 0.25);
    CHECK(h.coefficient(2, 0) == 9.0);

    CHECK_THROWS_AS(Poly::monomial(4, 3), DegreeError);
    CHECK_THROWS_AS((q * q * q * q) * (p * p * p), DegreeError);
    CHECK_THROWS_AS(Poly::monomial(1, 0, std::nan("")), InputError);
}

TEST_CASE("grid model construction", "[dynamics]") {
    const GridMeta grid = GridMeta::make(2.0, 16, 1.5, 0.5);
    const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
    CHECK(well.kind() == ModelKind::grid_well);
    for (std::size_t j = 0; j < 16; ++j) {
        CHECK(well.q().op().entry(j, j) == TraceScalar(static_cast<double>(j + 1) * grid.spacing()));
    }
    CHECK(well.q().op().max_abs() == 16.0 * grid.spacing());
    CHECK(well.p().certificate() <= 1e-14);
    CHECK(well.hamiltonian().certificate() <= 1e-14);
    CHECK(well.params().length == 2.0);

    const ModelSystem free = build_grid_model(grid, Potential::free);
    CHECK(free.kind() == ModelKind::grid_free);
    CHECK(free.hamiltonian().matrix() == well.hamiltonian().matrix());
}

TEST_CASE("well ground level at N = 2000", "[dynamics]") {
    const GridMeta grid = GridMeta::make(1.0, 2000);
    const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
    const double e1 = well.energy_basis().eigenvalues()[0];
    CHECK_THAT(e1, WithinRel(std::numbers::pi * std::numbers::pi / 2.0, 0.005));
    CHECK_THAT(e1, WithinRel(well_level(1, 1.0, 1.0, 1.0), 0.005));
}

TEST_CASE("grid refinement converges at second order", "[dynamics]") {
    // h = L / (N + 1): N = 99 -> 199 halves h exactly.
    const auto rel_err = [](std::size_t n) {
        const GridMeta grid = GridMeta::make(1.0, n);
        const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
        const double exact = well_level(1, 1.0, 1.0, 1.0);
        return std::abs(well.energy_basis().eigenvalues()[0] - exact) / exact;
    };
    const double coarse = rel_err(99);
    const double fine = rel_err(199);
    CHECK(coarse / fine >= 3.0);
    CHECK_THAT(coarse / fine, WithinRel(4.0, 0.01));
}

TEST_CASE("oscillator ladder construction", "[dynamics]") {
    const double m = 1.3;
    const double w = 0.7;
    const double hbar = 1.1;
    const ModelSystem osc = build_oscillator_ladder(8, m, w, hbar);
    CHECK(osc.kind() == ModelKind::oscillator_ladder);
    CHECK_THAT(osc.hamiltonian().op().entry(0, 0).re(), WithinAbs(hbar * w / 2.0, 1e-12));
    CHECK(osc.q().certificate() == 0.0);
    CHECK(osc.p().certificate() <= 1e-15);

    const Eigen::MatrixXcd c = commutator(osc.q(), osc.p()).matrix();
    CHECK(test::max_diff(interior(c), I * hbar * Eigen::MatrixXcd::Identity(7, 7)) <= 1e-12);
    // The last diagonal entry carries the truncation defect.
    CHECK(std::abs(c(7, 7) - I * hbar) > 1.0);

    for (std::size_t k = 0; k + 1 < 8; ++k) {
        CHECK_THAT(osc.hamiltonian().op().entry(k, k).re(),
                   WithinAbs(hbar * w * (static_cast<double>(k) + 0.5), 1e-12));
    }
    CHECK_THROWS_AS(build_oscillator_ladder(3, 1.0, 1.0, 1.0), InputError);
}

TEST_CASE("Poisson bracket examples", "[dynamics]") {
    const double m = 2.0;
    const double w = 3.0;
    const Poly h = Poly::oscillator_hamiltonian(m, w);
    CHECK(poisson_rhs_classical(Poly::q(), h) == (1.0 / m) * Poly::p());
    CHECK(poisson_rhs_classical(Poly::p(), h) == (-m * w * w) * Poly::q());
    CHECK(poisson_rhs_classical(h, h).is_zero());
    // {q^4 p^2, q^2 p^2}: degree 7 overflows the cap.
    CHECK_THROWS_AS(poisson_rhs_classical(Poly::monomial(4, 2), Poly::monomial(2, 2)),
                    DegreeError);
}

TEST_CASE("quantize examples", "[dynamics]") {
    const ModelSystem osc = build_oscillator_ladder(10, 1.0, 1.0, 1.0);
    CHECK(quantize(Poly::q(), osc).matrix() == osc.q().matrix());
    const Eigen::MatrixXcd qp = osc.q().matrix() * osc.p().matrix();
    const Eigen::MatrixXcd pq = osc.p().matrix() * osc.q().matrix();
    CHECK(test::max_diff(quantize(Poly::q() * Poly::p(), osc).matrix(), 0.5 * (qp + pq)) <= 1e-14);
    CHECK(test::max_diff(quantize(Poly::q() * Poly::q(), osc).matrix(),
                         osc.q().matrix() * osc.q().matrix()) <= 1e-14);

    // q^2 p: (qqp + qpq + pqq) / 3.
    const Eigen::MatrixXcd &q = osc.q().matrix();
    const Eigen::MatrixXcd &p = osc.p().matrix();
    const Eigen::MatrixXcd weyl = (q * q * p + q * p * q + p * q * q) / 3.0;
    CHECK(test::max_diff(quantize(Poly::monomial(2, 1), osc).matrix(), weyl) <= 1e-13);

    const Eigen::MatrixXcd hq = quantize(Poly::oscillator_hamiltonian(1.0, 1.0), osc).matrix();
    CHECK(test::max_diff(hq, osc.hamiltonian().matrix()) <= 1e-13);
}

TEST_CASE("Heisenberg right-hand side", "[dynamics]") {
    const double m = 1.5;
    const double w = 0.8;
    const ModelSystem osc = build_oscillator_ladder(12, m, w, 1.0);
    const HermitianOperator dq = heisenberg_rhs(osc.hamiltonian(), osc.q(), 1.0);
    const HermitianOperator dp = heisenberg_rhs(osc.hamiltonian(), osc.p(), 1.0);
    CHECK(test::max_diff(interior(dq.matrix()), interior(osc.p().matrix() / m)) <= 1e-10);
    CHECK(test::max_diff(interior(dp.matrix()), interior(-m * w * w * osc.q().matrix())) <=
          1e-10);
    CHECK(heisenberg_rhs(osc.hamiltonian(), osc.hamiltonian(), 1.0).op().max_abs() <= 1e-12);

    const HermitianOperator small = certify_hermitian(Operator::identity(3));
    CHECK_THROWS_AS(heisenberg_rhs(osc.hamiltonian(), small, 1.0), DimensionError);
    CHECK_THROWS_AS(heisenberg_rhs(osc.hamiltonian(), osc.q(), 0.0), InputError);
}

TEST_CASE("Heisenberg right-hand side is always hermitian", "[dynamics][property]") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 9);
        const HermitianOperator h = random_hermitian(dim, rng, 3.0);
        const HermitianOperator a = random_hermitian(dim, rng);
        REQUIRE(heisenberg_rhs(h, a, 0.5 + trial * 0.01).certificate() <= 1e-12);
    }
}

TEST_CASE("eq3 examples on the truncated oscillator", "[dynamics]") {
    const double m = 1.0;
    const double w = 1.0;
    const ModelSystem osc = build_oscillator_ladder(16, m, w, 1.0);
    const Poly h = Poly::oscillator_hamiltonian(m, w);
    Rng rng(21);
    const StateVector psi = low_level_state(16, 4, rng);

    const Eq3Result rq = eq3_check(Poly::q(), h, osc, psi);
    CHECK(rq.gap <= 1e-9);
    CHECK_THAT(rq.lhs, WithinAbs(expect_c(osc.p(), psi) / m, 1e-12));

    const Eq3Result rh = eq3_check(h, h, osc, psi);
    CHECK(rh.lhs == 0.0);
    CHECK(std::abs(rh.rhs) <= 1e-12);

    CHECK(eq3_check(Poly::q() * Poly::q(), h, osc, psi).gap <= 1e-9);

    const StateVector top = StateVector::basis(16, 15);
    CHECK_THROWS_AS(eq3_check(Poly::q(), h, osc, top), TruncationError);
}

TEST_CASE("eq3 is exact for quadratic Hamiltonians", "[dynamics][property]") {
    Rng rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.5, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double m = pos(rng);
        const double w = pos(rng);
        const double hbar = pos(rng);
        const ModelSystem osc = build_oscillator_ladder(16, m, w, hbar);
        const Poly h = Poly::oscillator_hamiltonian(m, w);
        Poly a = Poly::constant(u(rng));
        for (int qa = 0; qa <= 2; ++qa) {
            for (int pb = 0; qa + pb <= 2; ++pb) {
                a = a + Poly::monomial(qa, pb, u(rng));
            }
        }
        const StateVector psi = low_level_state(16, 1 + static_cast<std::size_t>(trial % 6), rng);
        REQUIRE(eq3_check(a, h, osc, psi).gap <= 1e-9);
    }
}

TEST_CASE("evolve_state examples", "[dynamics]") {
    const GridMeta grid = GridMeta::make(1.0, 256);
    const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
    Rng rng(2);
    const StateVector psi0(random_state(256, rng).amplitudes() / std::sqrt(grid.spacing()), grid);

    CHECK(test::max_diff(evolve_state(well, psi0, 0.0), psi0) <= 1e-12);

    const StateVector f3 = well.energy_basis().eigenvector(3);
    const StateVector f3t = evolve_state(well, f3, 0.123);
    CHECK_THAT(std::abs(complex_inner(f3, f3t).to_complex()), WithinAbs(1.0, 1e-8));

    const StateVector far = evolve_state(well, psi0, 3.7);
    CHECK_THAT(far.norm(), WithinAbs(1.0, 1e-8));
    CHECK(far.grid() == grid);

    // Spectral exponentiation agrees with the propagator built by apply_function.
    const StateVector via_u = propagator(well, 3.7).apply(psi0);
    CHECK(test::max_diff(far, via_u) <= 1e-9);

    CHECK_THROWS_AS(evolve_state(well, StateVector{1.0, 0.0}, 1.0), DimensionError);
}

TEST_CASE("free packet spreads by the closed-form law", "[dynamics]") {
    const double length = 1.0;
    const GridMeta grid = GridMeta::make(length, 1000);
    const ModelSystem free = build_grid_model(grid, Potential::free);
    const double sigma0 = length / 40.0;
    const StateVector psi0 = centered_packet(grid, sigma0);
    const double t2 = 2.0 * std::sqrt(3.0) * sigma0 * sigma0;

    std::vector<double> times;
    for (int k = 0; k <= 10; ++k) {
        times.push_back(t2 * k / 5.0);
    }
    const auto series = spread_series(free, psi0, times);
    REQUIRE(series.size() == times.size());
    CHECK_THAT(series[0].dx, WithinRel(sigma0, 0.01));
    std::size_t compared = 0;
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (series[k].edge_fraction >= 1e-6) {
            break; // the walls start to matter
        }
        ++compared;
        CHECK_THAT(series[k].dx, WithinRel(free_packet_width(sigma0, series[k].t, 1.0, 1.0), 0.01));
        if (k > 0) {
            CHECK(series[k].dx >= series[k - 1].dx);
        }
    }
    CHECK(compared > 5);
    CHECK_THAT(series[5].dx, WithinRel(2.0 * sigma0, 0.02));
}

TEST_CASE("stationary state keeps its width", "[dynamics]") {
    const GridMeta grid = GridMeta::make(1.0, 300);
    const ModelSystem well = build_grid_model(grid, Potential::infinite_well);
    const StateVector g = well.energy_basis().eigenvector(0);
    const std::vector<double> times{0.0, 0.1, 1.0, 10.0, 100.0};
    const auto series = spread_series(well, g, times);
    for (const SpreadPoint &s : series) {
        CHECK_THAT(s.dx, WithinAbs(series[0].dx, 1e-6));
    }

    const std::vector<double> bad{0.0, 2.0, 1.0};
    CHECK_THROWS_AS(spread_series(well, g, bad), InputError);
    const std::vector<double> negative{-1.0};
    CHECK_THROWS_AS(spread_series(well, g, negative), InputError);
}

TEST_CASE("evolve_operator examples", "[dynamics]") {
    const ModelSystem osc = build_oscillator_ladder(12, 1.0, 1.3, 1.0);
    CHECK(test::max_diff(evolve_operator(osc, osc.hamiltonian(), 2.1).matrix(),
                         osc.hamiltonian().matrix()) <= 1e-10);
    CHECK(test::max_diff(evolve_operator(osc, osc.q(), 0.0).matrix(), osc.q().matrix()) <= 1e-12);

    const HermitianOperator qt = evolve_operator(osc, osc.q(), 0.9);
    const auto e0 = eigendecompose(osc.q()).eigenvalues();
    const auto e1 = eigendecompose(qt).eigenvalues();
    for (std::size_t k = 0; k < e0.size(); ++k) {
        CHECK_THAT(e1[k], WithinAbs(e0[k], 1e-8));
    }
}

TEST_CASE("Schrodinger and Heisenberg pictures agree", "[dynamics][property]") {
    Rng rng(61);
    std::uniform_real_distribution<double> time(0.0, 5.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 4 + static_cast<std::size_t>(trial % 8);
        const ModelSystem osc = build_oscillator_ladder(dim, 1.0, 1.0 + 0.1 * trial, 1.0);
        const HermitianOperator a = random_hermitian(dim, rng);
        const StateVector psi0 = random_state(dim, rng);
        const double t = time(rng);
        const StateVector psit = evolve_state(osc, psi0, t);
        REQUIRE(std::abs(expect_c(evolve_operator(osc, a, t), psi0) - expect_c(a, psit)) <= 1e-9);
        REQUIRE(std::abs(psit.norm() - 1.0) <= 1e-8);
        REQUIRE(std::abs(expect_c(osc.hamiltonian(), psit) -
                         expect_c(osc.hamiltonian(), psi0)) <= 1e-8);
    }
}
