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

/// Fisher-information kernels: symmetric logarithmic derivatives, quantum
/// Fisher information (scalar and matrix), the incompatibility matrix whose
/// vanishing makes the matrix bound achievable, and classical Fisher
/// information for a fixed detection measurement.

#pragma once

#include <span>
#include <vector>

#include "povmest/family.hpp"
#include "povmest/mat2.hpp"
#include "povmest/smallmat.hpp"

namespace povmest {

/// Symmetric logarithmic derivative: the Hermitian L with
/// drho = (L rho + rho L) / 2, built in the eigenbasis of rho as
/// L_{mu nu} = 2 <e_mu| drho |e_nu> / (lambda_mu + lambda_nu), with elements
/// outside the support (lambda_mu + lambda_nu < 1e-12) set to zero.
/// Requires rho to be a density matrix and drho Hermitian and traceless.
Mat2 sld(const Mat2& rho, const Mat2& drho);

/// Scalar quantum Fisher information tr(rho L^2).
double qfi(const Mat2& rho, const Mat2& drho);

/// F(z) = F(x) / (dz/dx)^2 when the parameter is remapped by z = f(x).
double qfi_reparametrize(double f_q, double dz_dx);

/// Quantum Fisher matrix report for an encoded family at one point.
struct FisherReport {
    RealMat qfim;              ///< [F]_ij = Re tr(rho L_i L_j), symmetric PSD
    RealMat uhlmann;           ///< antisymmetric; scaled so that for a qubit
                               ///< U_01 = 2 (l0 - l1) Im(s_1 conj(s_2)) with
                               ///< s_i = <e0| d_i rho |e1>
    std::vector<Mat2> slds;
    double qfim_det = 0.0;
    double sv_ratio = 0.0;     ///< smallest/largest singular value of qfim
    bool achievable = false;   ///< all |uhlmann| entries below tolerance
    bool singular = false;     ///< sv_ratio below tolerance (m >= 2) or
                               ///< scalar information below tolerance (m == 1)
};

FisherReport qfim(const EncodedFamily& family, std::span<const double> x);

/// Classical Fisher information of a detection measurement (list of PSD
/// effects summing to identity). An outcome with vanishing probability but
/// non-vanishing probability derivative makes the information unbounded.
struct CfiResult {
    double value = 0.0;
    bool unbounded = false;
};

CfiResult cfi(const Mat2& rho, const Mat2& drho, const std::vector<Mat2>& effects);

}  // namespace povmest
