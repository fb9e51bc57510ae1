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

#include <catch2/catch_amalgamated.hpp>

#include "qcbench/dynamics.hpp"
#include "qcbench/errors.hpp"
#include "qcbench/operators.hpp"
#include "qcbench/random.hpp"
#include "test_support.hpp"

using namespace qcb;
using qcb::test::I;
using Catch::Matchers::WithinAbs;

TEST_CASE("adjoint examples", "[operator-algebra]") {
    Eigen::Matrix2cd m;
    m << 0.0, I, 0.0, 0.0;
    Eigen::Matrix2cd expected;
    expected << 0.0, 0.0, -I, 0.0;
    CHECK(adjoint(Operator(m)).matrix() == expected);
    CHECK(adjoint(adjoint(Operator(m))).matrix() == m);
    CHECK(adjoint(test::pauli_y()).matrix() == test::pauli_y().matrix());

    Rng rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::Matrix3cd a;
    Eigen::Matrix3cd b;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a(i, j) = {u(rng), u(rng)};
            b(i, j) = {u(rng), u(rng)};
        }
    }
    const Operator lhs = adjoint(Operator(a) * Operator(b));
    const Operator rhs = adjoint(Operator(b)) * adjoint(Operator(a));
    // Independent oracle: conj(sum_k a_jk b_ki) entry by entry.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 3; ++k) {
                s += a(j, k) * b(k, i);
            }
            CHECK(std::abs(lhs.matrix()(i, j) - std::conj(s)) <= 1e-14);
        }
    }
    CHECK(test::max_diff(lhs.matrix(), rhs.matrix()) <= 1e-14);
}

TEST_CASE("certify_hermitian examples", "[operator-algebra]") {
    const HermitianOperator d = certify_hermitian(Operator::diagonal({1.0, -2.0, 3.5}));
    CHECK(d.certificate() == 0.0);

    Eigen::Matrix2cd py;
    py << 0.0, I, -I, 0.0;
    CHECK_NOTHROW(certify_hermitian(Operator(py)));

    Eigen::Matrix2cd shift;
    shift << 0.0, 1.0, 0.0, 0.0;
    try {
        (void)certify_hermitian(Operator(shift));
        FAIL("expected NotHermitianError");
    } catch (const NotHermitianError &e) {
        CHECK(e.deviation() == 1.0);
    }

    CHECK_THROWS_AS(certify_hermitian(Operator(py), 0.0), InputError);

    // Tolerance scales with the largest entry.
    Eigen::Matrix2cd big;
    big << 1e6, 1.0, 1.0 + 1e-5, 0.0;
    CHECK_NOTHROW(certify_hermitian(Operator(big)));
    CHECK_THROWS_AS(certify_hermitian(Operator(big), 1e-12), NotHermitianError);
}

TEST_CASE("sym_antisym_split examples", "[operator-algebra]") {
    const HermitianOperator x = certify_hermitian(test::pauli_x());
    const HermitianOperator y = certify_hermitian(test::pauli_y());
    const HermitianOperator z = certify_hermitian(test::pauli_z());

    const SymAntisymSplit xy = sym_antisym_split(x, y);
    CHECK(xy.symmetric.op().max_abs() <= 1e-15);
    CHECK(test::max_diff(xy.antisymmetric.matrix(), z.matrix()) <= 1e-15);

    const SymAntisymSplit xx = sym_antisym_split(x, x);
    CHECK(xx.antisymmetric.op().max_abs() == 0.0);
    CHECK(test::max_diff(xx.symmetric.matrix(), Eigen::Matrix2cd::Identity()) == 0.0);

    const HermitianOperator d1 = certify_hermitian(Operator::diagonal({1.0, 2.0, 3.0}));
    const HermitianOperator d2 = certify_hermitian(Operator::diagonal({-1.0, 0.5, 4.0}));
    CHECK(sym_antisym_split(d1, d2).antisymmetric.op().max_abs() == 0.0);

    const HermitianOperator three = certify_hermitian(Operator::identity(3));
    CHECK_THROWS_AS(sym_antisym_split(x, three), DimensionError);
}

TEST_CASE("sym_antisym_split reconstructs the product", "[operator-algebra][property]") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
        const HermitianOperator a = random_hermitian(dim, rng);
        const HermitianOperator b = random_hermitian(dim, rng);
        const SymAntisymSplit s = sym_antisym_split(a, b);
        const Eigen::MatrixXcd ab = a.matrix() * b.matrix();
        const Eigen::MatrixXcd rebuilt = s.symmetric.matrix() + I * s.antisymmetric.matrix();
        REQUIRE(test::max_diff(ab, rebuilt) <= 1e-10);
        REQUIRE(hermiticity_deviation(s.symmetric.op()) <= 1e-10);
        REQUIRE(hermiticity_deviation(s.antisymmetric.op()) <= 1e-10);
    }
}

TEST_CASE("expect_c examples", "[operator-algebra]") {
    const HermitianOperator id = certify_hermitian(Operator::identity(2));
    const HermitianOperator z = certify_hermitian(test::pauli_z());
    CHECK_THAT(expect_c(id, test::cat_state()), WithinAbs(1.0, 1e-15));
    CHECK_THAT(expect_c(z, test::cat_state()), WithinAbs(0.0, 1e-15));

    const double length = 2.0;
    const GridMeta grid = GridMeta::make(length, 400);
    const StateVector ground = grid_sample(
        [&](double x) { return TraceScalar(std::sin(std::numbers::pi * x / length)); }, grid);
    CHECK_THAT(expect_c(position_operator(grid), ground), WithinAbs(length / 2.0, 1e-6));
}

TEST_CASE("expect_c errors", "[operator-algebra]") {
    const HermitianOperator z = certify_hermitian(test::pauli_z());
    CHECK_THROWS_AS(expect_c(z, StateVector{1.0, 1.0}), StateError);
    CHECK_THROWS_AS(expect_c(z, StateVector{1.0, 0.0, 0.0}), DimensionError);
    CHECK_NOTHROW(expect_c(z, StateVector{1.0 + 1e-10, 0.0}));
}

TEST_CASE("expect_r examples", "[operator-algebra]") {
    const HermitianOperator id = certify_hermitian(Operator::identity(2));
    const HermitianOperator z = certify_hermitian(test::pauli_z());
    const HermitianOperator five = certify_hermitian(Operator::diagonal({5.0, 5.0}));
    CHECK_THAT(expect_r(id, test::cat_state()), WithinAbs(2.0, 1e-15));
    CHECK_THAT(expect_r(z, test::cat_state()), WithinAbs(0.0, 1e-15));

    Rng rng(1);
    for (int k = 0; k < 10; ++k) {
        CHECK_THAT(expect_r(five, random_state(2, rng)), WithinAbs(10.0, 1e-13));
    }
}

TEST_CASE("dispersion examples", "[operator-algebra]") {
    const HermitianOperator z = certify_hermitian(test::pauli_z());
    CHECK(dispersion(z, StateVector{1.0, 0.0}) <= 1e-8);
    CHECK_THAT(dispersion(z, test::cat_state()), WithinAbs(1.0, 1e-12));

    const double a1 = 3.25;
    const double a2 = -0.75;
    const HermitianOperator a = certify_hermitian(Operator::diagonal({a1, a2}));
    CHECK_THAT(dispersion(a, test::cat_state()), WithinAbs(std::abs(a1 - a2) / 2.0, 1e-12));
}

TEST_CASE("av_decompose examples", "[operator-algebra]") {
    const HermitianOperator d12 = certify_hermitian(Operator::diagonal({1.0, 2.0}));
    const AvDecomposition eig = av_decompose(d12, StateVector{1.0, 0.0});
    CHECK(eig.alpha == 1.0);
    CHECK(eig.beta == 0.0);
    CHECK_FALSE(eig.orthogonal.has_value());

    const HermitianOperator z = certify_hermitian(test::pauli_z());
    const AvDecomposition cat = av_decompose(z, test::cat_state());
    CHECK_THAT(cat.alpha, WithinAbs(0.0, 1e-15));
    CHECK_THAT(cat.beta, WithinAbs(1.0, 1e-15));
    REQUIRE(cat.orthogonal.has_value());
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT((*cat.orthogonal)[0].re(), WithinAbs(r, 1e-15));
    CHECK_THAT((*cat.orthogonal)[1].re(), WithinAbs(-r, 1e-15));
}

TEST_CASE("av_decompose reconstructs random inputs", "[operator-algebra][property]") {
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
        const HermitianOperator a = random_hermitian(dim, rng);
        const StateVector psi = random_state(dim, rng);
        const AvDecomposition av = av_decompose(a, psi);
        REQUIRE(av.beta >= 0.0);
        REQUIRE(std::abs(av.alpha - expect_c(a, psi)) <= 1e-12);
        REQUIRE(std::abs(av.beta - dispersion(a, psi)) <= 1e-12);
        REQUIRE(av.orthogonal.has_value());
        const StateVector &perp = *av.orthogonal;
        REQUIRE(std::abs(perp.norm() - 1.0) <= 1e-12);
        REQUIRE(std::abs(complex_inner(psi, perp).to_complex()) <= 1e-10);
        const Eigen::VectorXcd apsi = a.matrix() * psi.amplitudes();
        const Eigen::VectorXcd rebuilt = av.alpha * psi.amplitudes() + av.beta * perp.amplitudes();
        REQUIRE((apsi - rebuilt).norm() <= 1e-9);
    }
}

TEST_CASE("weak commutativity in the real form", "[operator-algebra][property]") {
    Rng rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
        const HermitianOperator a = random_hermitian(dim, rng);
        const HermitianOperator b = random_hermitian(dim, rng);
        const StateVector psi = random_state(dim, rng);
        const Operator c = commutator(a.op(), b.op());
        REQUIRE(std::abs(real_form(c, psi)) <= 1e-10);

        const Operator ab = a.op() * b.op();
        const Operator ba = b.op() * a.op();
        REQUIRE(std::abs(real_form(ab, psi) - real_form(ba, psi)) <= 1e-10);
        const HermitianOperator anti = certify_hermitian(ab + ba);
        REQUIRE(std::abs(real_form(ab, psi) - expect_c(anti, psi)) <= 1e-10);

        const HermitianOperator a2 = certify_hermitian(a.op() * a.op());
        const double d = dispersion(a, psi);
        const double m = expect_c(a, psi);
        REQUIRE(std::abs(d * d + m * m - expect_c(a2, psi)) <= 1e-9);
    }
}

TEST_CASE("commutator matrix elements between different states do not vanish",
          "[operator-algebra]") {
    // Only the diagonal form is claimed; an off-diagonal element shows why.
    const Operator c = commutator(test::pauli_x(), test::pauli_y());
    const StateVector e0{1.0, 0.0};
    const StateVector ie0{TraceScalar::unit_imaginary(), 0.0};
    const TraceScalar off = complex_inner(ie0, c.apply(e0));
    CHECK(trace(off) != 0.0);
    CHECK(real_form(c, e0) == 0.0);
}

TEST_CASE("fingerprint separates operators", "[operator-algebra]") {
    const Operator a = Operator::diagonal({1.0, 2.0});
    const Operator b = Operator::diagonal({1.0, 2.0});
    const Operator c = Operator::diagonal({1.0, 2.5});
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(fingerprint(a) != fingerprint(c));
    const GridMeta g1 = GridMeta::make(1.0, 8);
    const GridMeta g2 = GridMeta::make(1.0, 8, 2.0);
    CHECK(fingerprint(position_operator(g1).op()) != fingerprint(Operator(position_operator(g1).matrix())));
    CHECK(fingerprint(Operator(position_operator(g1).matrix(), g1)) !=
          fingerprint(Operator(position_operator(g1).matrix(), g2)));
}
