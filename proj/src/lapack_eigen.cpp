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

#include "lapack_eigen.hpp"

#include <complex>
#include <string>
#include <vector>

#include <lapacke.h>

#include "qcbench/errors.hpp"

namespace qcb::detail {

namespace {

bool is_real(const Eigen::MatrixXcd &a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = j; i < a.rows(); ++i) {
            if (a(i, j).imag() != 0.0) {
                return false;
            }
        }
    }
    return true;
}

bool is_tridiagonal(const Eigen::MatrixXcd &a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = j + 2; i < a.rows(); ++i) {
            if (a(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

[[noreturn]] void fail(const char *routine, lapack_int info) {
    throw ConvergenceError(std::string(routine) + " failed with info = " + std::to_string(info),
                           static_cast<long>(info));
}

RawEigenpairs solve_tridiagonal(const Eigen::MatrixXcd &a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::VectorXd d(n);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n); // dstevr wants length n workspace
    for (lapack_int i = 0; i < n; ++i) {
        d(i) = a(i, i).real();
        if (i + 1 < n) {
            e(i) = a(i + 1, i).real();
        }
    }
    Eigen::VectorXd w(n);
    Eigen::MatrixXd z(n, n);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'A', n, d.data(), e.data(), 0.0,
                                           0.0, 0, 0, 0.0, &found, w.data(), z.data(), n,
                                           support.data());
    if (info != 0 || found != n) {
        fail("dstevr", info);
    }
    return {std::move(w), z.cast<std::complex<double>>()};
}

RawEigenpairs solve_real(const Eigen::MatrixXcd &a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::MatrixXd m = a.real();
    Eigen::VectorXd w(n);
    Eigen::MatrixXd z(n, n);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, m.data(), n, 0.0,
                                           0.0, 0, 0, 0.0, &found, w.data(), z.data(), n,
                                           support.data());
    if (info != 0 || found != n) {
        fail("dsyevr", info);
    }
    return {std::move(w), z.cast<std::complex<double>>()};
}

RawEigenpairs solve_complex(const Eigen::MatrixXcd &a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::MatrixXcd m = a;
    Eigen::VectorXd w(n);
    Eigen::MatrixXcd z(n, n);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_zheevr(
        LAPACK_COL_MAJOR, 'V', 'A', 'L', n, reinterpret_cast<lapack_complex_double *>(m.data()), n,
        0.0, 0.0, 0, 0, 0.0, &found, w.data(), reinterpret_cast<lapack_complex_double *>(z.data()),
        n, support.data());
    if (info != 0 || found != n) {
        fail("zheevr", info);
    }
    return {std::move(w), std::move(z)};
}

} // namespace

RawEigenpairs hermitian_eigenpairs(const Eigen::MatrixXcd &a) {
    if (a.rows() == 1) {
        return {Eigen::VectorXd::Constant(1, a(0, 0).real()), Eigen::MatrixXcd::Identity(1, 1)};
    }
    if (is_real(a)) {
        return is_tridiagonal(a) ? solve_tridiagonal(a) : solve_real(a);
    }
    return solve_complex(a);
}

} // namespace qcb::detail
