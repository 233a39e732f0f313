// Copyright 2026 The povmest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povmest/mat2.hpp"

#include <cmath>
#include <stdexcept>

#include "povmest/tolerances.hpp"

namespace povmest {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Mat2 Mat2::adjoint() const {
    return {std::conj(a00), std::conj(a10), std::conj(a01), std::conj(a11)};
}

double Mat2::frobenius_norm() const {
    return std::sqrt(std::norm(a00) + std::norm(a01) + std::norm(a10) + std::norm(a11));
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
}

Mat2 Mat2::operator-(const Mat2& o) const {
    return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
}

Mat2 Mat2::operator*(cdouble s) const { return {a00 * s, a01 * s, a10 * s, a11 * s}; }

Mat2& Mat2::operator+=(const Mat2& o) {
    a00 += o.a00;
    a01 += o.a01;
    a10 += o.a10;
    a11 += o.a11;
    return *this;
}

Mat2 pauli_dot(const Vec3& v) {
    return {cdouble(v.z, 0), cdouble(v.x, -v.y), cdouble(v.x, v.y), cdouble(-v.z, 0)};
}

bool is_finite(const Mat2& m) {
    for (cdouble c : {m.a00, m.a01, m.a10, m.a11}) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            return false;
        }
    }
    return true;
}

bool is_hermitian(const Mat2& m, double tolerance) {
    return is_finite(m) && std::abs(m.a00.imag()) <= tolerance &&
           std::abs(m.a11.imag()) <= tolerance && std::abs(m.a01 - std::conj(m.a10)) <= tolerance;
}

bool is_psd(const Mat2& m, double tolerance) {
    if (!is_hermitian(m, tolerance)) {
        return false;
    }
    const double c0 = (m.a00.real() + m.a11.real()) / 2;
    const Vec3 v{m.a01.real(), -m.a01.imag(), (m.a00.real() - m.a11.real()) / 2};
    return c0 - v.norm() >= -tolerance;
}

bool is_density(const Mat2& m, double tolerance) {
    return is_psd(m, tolerance) && std::abs(m.trace() - 1.0) <= tolerance;
}

double real_trace_product(const Mat2& a, const Mat2& b) {
    return trace_product(a, b).real();
}

cdouble trace_product(const Mat2& a, const Mat2& b) {
    return a.a00 * b.a00 + a.a01 * b.a10 + a.a10 * b.a01 + a.a11 * b.a11;
}

EigenPair2 eig_hermitian(const Mat2& m) {
    if (!is_finite(m)) {
        throw std::invalid_argument("eig_hermitian: non-finite matrix entries");
    }
    if (!is_hermitian(m, tol::structural)) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    }
    const double c0 = (m.a00.real() + m.a11.real()) / 2;
    // M = c0 I + v . sigma with v the half Bloch components.
    const Vec3 v{m.a01.real(), -m.a01.imag(), (m.a00.real() - m.a11.real()) / 2};
    const double vn = v.norm();

    EigenPair2 out;
    out.lambda0 = c0 + vn;
    out.lambda1 = c0 - vn;
    if (vn == 0.0) {
        out.e0 = {cdouble(1, 0), cdouble(0, 0)};
        out.e1 = {cdouble(0, 0), cdouble(1, 0)};
        return out;
    }
    const Vec3 n = v * (1.0 / vn);
    // +n eigenvector, branch chosen away from the removable singularity.
    if (n.z >= 0.0) {
        const double norm = std::sqrt(2.0 * (1.0 + n.z));
        out.e0 = {cdouble((1.0 + n.z) / norm, 0), cdouble(n.x, n.y) / norm};
    } else {
        const double norm = std::sqrt(2.0 * (1.0 - n.z));
        out.e0 = {cdouble(n.x, -n.y) / norm, cdouble((1.0 - n.z) / norm, 0)};
    }
    out.e1 = {-std::conj(out.e0[1]), std::conj(out.e0[0])};
    return out;
}

Mat2 psd_sqrt(const Mat2& m) {
    const EigenPair2 eig = eig_hermitian(m);
    if (eig.lambda1 < -tol::structural) {
        throw std::invalid_argument("psd_sqrt: matrix has a negative eigenvalue");
    }
    const double l0 = std::sqrt(std::max(eig.lambda0, 0.0));
    const double l1 = std::sqrt(std::max(eig.lambda1, 0.0));
    return l0 * projector(eig.e0) + l1 * projector(eig.e1);
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 bloch_to_matrix(const Vec3& v) {
    if (!(v.norm() <= 1.0 + tol::structural)) {
        throw std::invalid_argument("bloch_to_matrix: Bloch vector leaves the unit ball");
    }
    return 0.5 * (Mat2::identity() + pauli_dot(v));
}

Vec3 matrix_to_bloch(const Mat2& m) {
    if (!is_hermitian(m, tol::structural)) {
        throw std::invalid_argument("matrix_to_bloch: matrix is not Hermitian");
    }
    return {2.0 * m.a01.real(), -2.0 * m.a01.imag(), m.a00.real() - m.a11.real()};
}

Mat2 projector(const std::array<cdouble, 2>& e) {
    return {e[0] * std::conj(e[0]), e[0] * std::conj(e[1]),
            e[1] * std::conj(e[0]), e[1] * std::conj(e[1])};
}

}  // namespace povmest
