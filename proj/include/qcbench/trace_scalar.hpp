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
 * The two-dimensional numeric basis underlying both inner products: complex
 * scalars equipped with a trace form tr(x) = x + conj(x) and a norm form
 * N(x) = x conj(x). Every element satisfies x^2 - tr(x) x + N(x) = 0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace qcb {

class TraceScalar {
  public:
    constexpr TraceScalar() = default;
    // Implicit from real so that `TraceScalar w = 0.5;` reads naturally.
    constexpr TraceScalar(double re, double im = 0.0) : re_(re), im_(im) {}
    constexpr TraceScalar(std::complex<double> z) : re_(z.real()), im_(z.imag()) {}

    [[nodiscard]] constexpr double re() const noexcept { return re_; }
    [[nodiscard]] constexpr double im() const noexcept { return im_; }
    [[nodiscard]] constexpr TraceScalar conj() const noexcept { return {re_, -im_}; }
    [[nodiscard]] constexpr std::complex<double> to_complex() const noexcept {
        return {re_, im_};
    }
    constexpr operator std::complex<double>() const noexcept { return to_complex(); }

    [[nodiscard]] static constexpr TraceScalar unit_imaginary() noexcept { return {0.0, 1.0}; }

    constexpr TraceScalar &operator+=(TraceScalar o) noexcept {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    constexpr TraceScalar &operator-=(TraceScalar o) noexcept {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    constexpr TraceScalar &operator*=(TraceScalar o) noexcept {
        const double r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        return *this;
    }

    friend constexpr TraceScalar operator+(TraceScalar a, TraceScalar b) noexcept { return a += b; }
    friend constexpr TraceScalar operator-(TraceScalar a, TraceScalar b) noexcept { return a -= b; }
    friend constexpr TraceScalar operator*(TraceScalar a, TraceScalar b) noexcept { return a *= b; }
    friend constexpr TraceScalar operator-(TraceScalar a) noexcept { return {-a.re_, -a.im_}; }
    friend constexpr bool operator==(TraceScalar a, TraceScalar b) noexcept = default;

  private:
    double re_ = 0.0;
    double im_ = 0.0;
};

/// tr(x) = x + conj(x), a real number.
[[nodiscard]] constexpr double trace(TraceScalar x) noexcept { return 2.0 * x.re(); }

/// N(x) = x conj(x) = re^2 + im^2.
[[nodiscard]] constexpr double norm_form(TraceScalar x) noexcept {
    return x.re() * x.re() + x.im() * x.im();
}

/// x^2 - tr(x) x + N(x); zero up to rounding for every x.
[[nodiscard]] constexpr TraceScalar minimal_poly_residual(TraceScalar x) noexcept {
    return x * x - TraceScalar(trace(x)) * x + TraceScalar(norm_form(x));
}

/// Real 2x2 representation [[re, -im], [im, re]]. Verification view only.
[[nodiscard]] inline Eigen::Matrix2d embed_matrix(TraceScalar x) {
    Eigen::Matrix2d m;
    m << x.re(), -x.im(), x.im(), x.re();
    return m;
}

/// Largest component magnitude; used for residual tolerances.
[[nodiscard]] inline double max_component(TraceScalar x) noexcept {
    return std::max(std::abs(x.re()), std::abs(x.im()));
}

} // namespace qcb
