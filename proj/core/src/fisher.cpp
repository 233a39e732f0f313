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

#include "povmest/fisher.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "povmest/tolerances.hpp"

namespace povmest {

namespace {

cdouble bra_op_ket(const std::array<cdouble, 2>& bra, const Mat2& op,
                   const std::array<cdouble, 2>& ket) {
    const cdouble r0 = op.a00 * ket[0] + op.a01 * ket[1];
    const cdouble r1 = op.a10 * ket[0] + op.a11 * ket[1];
    return std::conj(bra[0]) * r0 + std::conj(bra[1]) * r1;
}

void validate_sld_inputs(const Mat2& rho, const Mat2& drho) {
    if (!is_density(rho)) {
        throw std::invalid_argument("sld: rho is not a density matrix");
    }
    if (!is_hermitian(drho, tol::structural)) {
        throw std::invalid_argument("sld: drho is not Hermitian");
    }
    if (std::abs(drho.trace()) > tol::traceless) {
        throw std::invalid_argument("sld: drho is not traceless");
    }
}

}  // namespace

Mat2 sld(const Mat2& rho, const Mat2& drho) {
    validate_sld_inputs(rho, drho);
    const EigenPair2 eig = eig_hermitian(rho);
    const std::array<std::array<cdouble, 2>, 2> basis{eig.e0, eig.e1};
    const std::array<double, 2> lambda{eig.lambda0, eig.lambda1};

    Mat2 out{};
    for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
            const double denom = lambda[mu] + lambda[nu];
            if (denom < tol::support_cutoff) {
                continue;  // out-of-support element, zero by convention
            }
            const cdouble elem = 2.0 * bra_op_ket(basis[mu], drho, basis[nu]) / denom;
            // |e_mu><e_nu| contribution in computational components.
            const auto& em = basis[mu];
            const auto& en = basis[nu];
            out += Mat2{elem * em[0] * std::conj(en[0]), elem * em[0] * std::conj(en[1]),
                        elem * em[1] * std::conj(en[0]), elem * em[1] * std::conj(en[1])};
        }
    }
    return out;
}

double qfi(const Mat2& rho, const Mat2& drho) {
    const Mat2 l = sld(rho, drho);
    return real_trace_product(rho, l * l);
}

double qfi_reparametrize(double f_q, double dz_dx) {
    if (dz_dx == 0.0) {
        throw std::invalid_argument("qfi_reparametrize: dz/dx must be nonzero");
    }
    return f_q / (dz_dx * dz_dx);
}

FisherReport qfim(const EncodedFamily& family, std::span<const double> x) {
    const std::size_t m = family.dim();
    const Mat2 rho = family.state(x);
    const std::vector<Mat2> drho = family.derivatives(x);

    FisherReport report;
    report.slds.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        report.slds.push_back(sld(rho, drho[i]));
    }

    report.qfim = RealMat(m);
    report.uhlmann = RealMat(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const cdouble z = trace_product(rho, report.slds[i] * report.slds[j]);
            report.qfim.at(i, j) = z.real();
            report.uhlmann.at(i, j) = z.imag() / 2.0;
        }
    }
    // Symmetrize away rounding noise; the antisymmetric part is the
    // incompatibility matrix which is kept as-is.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double s = 0.5 * (report.qfim.at(i, j) + report.qfim.at(j, i));
            report.qfim.at(i, j) = s;
            report.qfim.at(j, i) = s;
        }
    }

    report.qfim_det = sym_det(report.qfim);
    report.sv_ratio = singular_value_ratio(report.qfim);
    report.achievable = report.uhlmann.max_abs() <= tol::achievable;
    report.singular = m == 1 ? report.qfim.at(0, 0) <= tol::singular_ratio
                             : report.sv_ratio <= tol::singular_ratio;
    return report;
}

CfiResult cfi(const Mat2& rho, const Mat2& drho, const std::vector<Mat2>& effects) {
    if (!is_density(rho)) {
        throw std::invalid_argument("cfi: rho is not a density matrix");
    }
    if (!is_hermitian(drho, tol::structural)) {
        throw std::invalid_argument("cfi: drho is not Hermitian");
    }
    Mat2 sum{};
    for (const Mat2& e : effects) {
        if (!is_psd(e, tol::structural)) {
            throw std::invalid_argument("cfi: measurement effect is not PSD");
        }
        sum += e;
    }
    if ((sum - Mat2::identity()).frobenius_norm() > tol::structural) {
        throw std::invalid_argument("cfi: measurement effects do not sum to identity");
    }

    CfiResult out;
    for (const Mat2& e : effects) {
        const double p = real_trace_product(e, rho);
        const double dp = real_trace_product(e, drho);
        if (p < tol::probability_floor) {
            // A vanishing-probability outcome whose probability still moves
            // with the parameter carries unbounded information.
            if (std::abs(dp) >= tol::cfi_derivative_floor) {
                out.unbounded = true;
            }
            continue;
        }
        out.value += dp * dp / p;
    }
    if (out.unbounded) {
        out.value = std::numeric_limits<double>::infinity();
    }
    return out;
}

}  // namespace povmest
