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

/// Closed-form 2x2 complex linear algebra: the carrier type for qubit states,
/// measurement effects, state derivatives and logarithmic derivatives.

#pragma once

#include <array>
#include <complex>

namespace povmest {

using cdouble = std::complex<double>;

/// Real 3-vector (Bloch vectors and measurement axes).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Dense 2x2 complex matrix, row major.
struct Mat2 {
    cdouble a00{}, a01{}, a10{}, a11{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static Mat2 pauli_y() { return {0.0, cdouble(0, -1), cdouble(0, 1), 0.0}; }
    static Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

    cdouble trace() const { return a00 + a11; }
    Mat2 adjoint() const;
    double frobenius_norm() const;

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator*(cdouble s) const;
    Mat2 operator*(double s) const { return *this * cdouble(s, 0); }
    Mat2& operator+=(const Mat2& o);
};

inline Mat2 operator*(cdouble s, const Mat2& m) { return m * s; }
inline Mat2 operator*(double s, const Mat2& m) { return m * cdouble(s, 0); }

/// v . sigma, the traceless Hermitian matrix with Bloch components v.
Mat2 pauli_dot(const Vec3& v);

bool is_finite(const Mat2& m);
bool is_hermitian(const Mat2& m, double tolerance = 1e-12);
bool is_psd(const Mat2& m, double tolerance = 1e-12);
bool is_density(const Mat2& m, double tolerance = 1e-10);

/// Re tr(A B), the Hilbert-Schmidt pairing restricted to its real part.
double real_trace_product(const Mat2& a, const Mat2& b);
cdouble trace_product(const Mat2& a, const Mat2& b);

/// Spectral decomposition of a Hermitian 2x2 matrix, eigenvalues descending.
struct EigenPair2 {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    std::array<cdouble, 2> e0{};
    std::array<cdouble, 2> e1{};
};

/// Closed-form eigendecomposition. Eigenvalues are sorted descending; an
/// exactly degenerate spectrum returns the computational basis. Throws
/// std::invalid_argument for non-finite or non-Hermitian input.
EigenPair2 eig_hermitian(const Mat2& m);

/// Unique PSD square root of a PSD matrix. Eigenvalues in [-1e-12, 0) are
/// clipped to zero; anything lower throws std::invalid_argument.
Mat2 psd_sqrt(const Mat2& m);

/// A B - B A.
Mat2 commutator(const Mat2& a, const Mat2& b);

/// rho = (I + v . sigma) / 2. Requires |v| <= 1 + 1e-12.
Mat2 bloch_to_matrix(const Vec3& v);

/// Pauli components of a Hermitian matrix, scaled so that
/// matrix_to_bloch(bloch_to_matrix(v)) == v for density matrices.
Vec3 matrix_to_bloch(const Mat2& m);

/// Rank-1 projector |e><e| from a (not necessarily normalized) 2-vector.
Mat2 projector(const std::array<cdouble, 2>& e);

}  // namespace povmest
