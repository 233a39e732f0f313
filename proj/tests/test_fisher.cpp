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
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "povmest/tolerances.hpp"

using namespace povmest;

namespace {
constexpr double pi = std::numbers::pi;

// Random mixed measurement-encoded family, its state and derivative.
struct MixedInstance {
    Mat2 rho;
    Mat2 drho;
};

MixedInstance random_encoded_instance(oracle::Rng& rng) {
    const auto [alpha, beta] = rng.coefficients();
    const QubitState probe = rng.probe(0.9);
    const MeasurementFamily mf =
        MeasurementFamily::alpha_parameter(beta, rng.uniform(0, 2 * pi));
    const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
    const std::array<double, 1> x{alpha};
    return {fam.state(x), fam.derivative(x, 0)};
}

std::vector<Mat2> projective_measurement(const Mat2& hermitian) {
    const EigenPair2 e = eig_hermitian(hermitian);
    return {projector(e.e0), projector(e.e1)};
}
}  // namespace

TEST_CASE("sld: zero derivative gives the zero operator") {
    const Mat2 rho = QubitState(0.6, 1.0, 0.4).matrix();
    CHECK(sld(rho, Mat2::zero()).frobenius_norm() == 0.0);
}

TEST_CASE("sld: pure state example solved independently") {
    // rho = |0><0|, drho = sigma_x / 2: the convention zeroes the
    // out-of-support corner and the solution is sigma_x.
    const Mat2 rho{1.0, 0.0, 0.0, 0.0};
    const Mat2 drho = 0.5 * Mat2::pauli_x();
    CHECK((sld(rho, drho) - Mat2::pauli_x()).frobenius_norm() <= 1e-13);
}

TEST_CASE("sld: commuting case L = 2 drho at the maximally mixed state") {
    const Mat2 drho = 0.37 * Mat2::pauli_z();
    const Mat2 l = sld(0.5 * Mat2::identity(), drho);
    CHECK((l - 2.0 * drho).frobenius_norm() <= 1e-13);
}

TEST_CASE("sld: rejects non-traceless derivatives") {
    CHECK_THROWS_AS(sld(0.5 * Mat2::identity(), Mat2::identity()), std::invalid_argument);
}

TEST_CASE("sld: defining equation and dense-solve agreement over random mixed states") {
    oracle::Rng rng(41);
    for (int k = 0; k < 500; ++k) {
        const MixedInstance inst = random_encoded_instance(rng);
        const Mat2 l = sld(inst.rho, inst.drho);
        const Mat2 residual = inst.drho - 0.5 * (l * inst.rho + inst.rho * l);
        CHECK(residual.frobenius_norm() <= 1e-10);
        CHECK(is_hermitian(l, 1e-10));
        // Independent route: dense linear solve of the defining equation.
        const Mat2 l_dense = oracle::lyapunov_sld(inst.rho, inst.drho);
        CHECK((l - l_dense).frobenius_norm() <= 1e-9 * std::max(1.0, l.frobenius_norm()));
    }
}

TEST_CASE("qfi: spectral formula equals the Bloch closed form on random mixed states") {
    oracle::Rng rng(42);
    for (int k = 0; k < 500; ++k) {
        const MixedInstance inst = random_encoded_instance(rng);
        const double f = qfi(inst.rho, inst.drho);
        CHECK(f >= 0.0);
        CHECK(f == doctest::Approx(oracle::bloch_qfi(inst.rho, inst.drho)).epsilon(1e-9));
    }
}

TEST_CASE("qfi: zero at the maximally mixed state with zero derivative") {
    CHECK(qfi(0.5 * Mat2::identity(), Mat2::zero()) == 0.0);
}

TEST_CASE("qfi: transverse-probe values for both coefficient encodings") {
    const double alpha = 0.4, beta = 0.1;
    const double g1 = std::sqrt(alpha * alpha - beta * beta);
    const double g2 = std::sqrt((1 - alpha) * (1 - alpha) - beta * beta);
    const double h = g1 + g2;

    // beta encoding at the optimal probe: F = h2^2 / (1 - h^2).
    {
        const MeasurementFamily mf = MeasurementFamily::beta_parameter(alpha, 0.0);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, QubitState::plus());
        const std::array<double, 1> x{beta};
        const double h2 = -beta / g1 - beta / g2;
        const double expected = h2 * h2 / (1 - h * h);
        CHECK(qfi(fam.state(x), fam.derivative(x, 0)) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    // alpha encoding: F = h1^2 / (1 - h^2) = 8.29729e-3 at (0.4, 0.1).
    {
        const MeasurementFamily mf = MeasurementFamily::alpha_parameter(beta, 0.0);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, QubitState::plus());
        const std::array<double, 1> x{alpha};
        const double h1 = alpha / g1 - (1 - alpha) / g2;
        const double expected = h1 * h1 / (1 - h * h);
        const double f = qfi(fam.state(x), fam.derivative(x, 0));
        CHECK(f == doctest::Approx(expected).epsilon(1e-12));
        CHECK(f == doctest::Approx(8.2973e-3).epsilon(1e-4));
    }
}

TEST_CASE("qfim: single parameter reduces to the scalar information") {
    oracle::Rng rng(43);
    for (int k = 0; k < 50; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const QubitState probe = rng.probe(0.95);
        const MeasurementFamily mf = MeasurementFamily::beta_parameter(alpha, 0.4);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
        const std::array<double, 1> x{beta};
        const FisherReport report = qfim(fam, x);
        CHECK(report.qfim.at(0, 0) ==
              doctest::Approx(qfi(fam.state(x), fam.derivative(x, 0))).epsilon(1e-12));
        CHECK(report.uhlmann.max_abs() <= 1e-15);
    }
}

TEST_CASE("qfim: real-entried families are achievable, coefficient pairs singular") {
    oracle::Rng rng(44);
    for (int k = 0; k < 100; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const double theta = rng.uniform(0, 2 * pi);
        // Probe in the x-z plane keeps every matrix real.
        const QubitState probe(rng.uniform(0.1, 0.95), rng.uniform(0, pi),
                               k % 2 == 0 ? 0.0 : pi);
        const MeasurementFamily mf = MeasurementFamily::alpha_beta(theta);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
        const std::array<double, 2> x{alpha, beta};
        const FisherReport report = qfim(fam, x);
        CHECK(report.achievable);
        CHECK(report.uhlmann.max_abs() <= 1e-12);
        CHECK(report.singular);  // coefficient derivatives share one direction
        CHECK(report.sv_ratio <= tol::singular_ratio);
    }
}

TEST_CASE("qfim: PSD and symmetric") {
    oracle::Rng rng(45);
    for (int k = 0; k < 200; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const MeasurementFamily mf = MeasurementFamily::alpha_theta(beta);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, rng.probe(0.95));
        const std::array<double, 2> x{alpha, rng.uniform(0, 2 * pi)};
        const FisherReport report = qfim(fam, x);
        CHECK(report.qfim.is_symmetric(1e-12));
        const SymEigen eig = sym_eigen(report.qfim);
        CHECK(eig.values.back() >= -1e-10);
    }
}

TEST_CASE("qfim: incompatibility entry matches the eigenbasis expression") {
    oracle::Rng rng(46);
    for (int k = 0; k < 100; ++k) {
        // Family with a genuinely complex off-diagonal: sx and sy directions.
        const double wz = rng.uniform(0.2, 0.8);
        const double x1 = rng.uniform(-0.15, 0.15);
        const double x2 = rng.uniform(-0.15, 0.15);
        const EncodedFamily fam = EncodedFamily::custom(
            2,
            [wz](std::span<const double> x) {
                return 0.5 * (Mat2::identity() + wz * Mat2::pauli_z() + x[0] * Mat2::pauli_x() +
                              x[1] * Mat2::pauli_y());
            },
            [](std::span<const double>, std::size_t i) {
                return 0.5 * (i == 0 ? Mat2::pauli_x() : Mat2::pauli_y());
            });
        const std::array<double, 2> x{x1, x2};
        const FisherReport report = qfim(fam, x);

        const Mat2 rho = fam.state(x);
        const EigenPair2 eig = eig_hermitian(rho);
        const auto bra_op_ket = [](const std::array<cdouble, 2>& a, const Mat2& op,
                                   const std::array<cdouble, 2>& b) {
            return std::conj(a[0]) * (op.a00 * b[0] + op.a01 * b[1]) +
                   std::conj(a[1]) * (op.a10 * b[0] + op.a11 * b[1]);
        };
        const cdouble s1 = bra_op_ket(eig.e0, fam.derivative(x, 0), eig.e1);
        const cdouble s2 = bra_op_ket(eig.e0, fam.derivative(x, 1), eig.e1);
        const double expected =
            2.0 * (eig.lambda0 - eig.lambda1) * std::imag(s1 * std::conj(s2));
        CHECK(report.uhlmann.at(0, 1) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(report.uhlmann.at(0, 1) == doctest::Approx(-report.uhlmann.at(1, 0)).epsilon(1e-12));
        CHECK_FALSE(report.achievable);
    }
}

TEST_CASE("cfi: trivial measurement carries no information") {
    const MixedInstance inst = [] {
        oracle::Rng rng(47);
        return random_encoded_instance(rng);
    }();
    const CfiResult r = cfi(inst.rho, inst.drho, {Mat2::identity()});
    CHECK(r.value <= 1e-30);  // tr(drho) is zero up to rounding
    CHECK_FALSE(r.unbounded);
}

TEST_CASE("cfi: eigenbasis of the logarithmic derivative saturates the bound") {
    oracle::Rng rng(48);
    for (int k = 0; k < 500; ++k) {
        const MixedInstance inst = random_encoded_instance(rng);
        const Mat2 l = sld(inst.rho, inst.drho);
        const CfiResult c = cfi(inst.rho, inst.drho, projective_measurement(l));
        CHECK_FALSE(c.unbounded);
        CHECK(c.value == doctest::Approx(qfi(inst.rho, inst.drho)).epsilon(1e-8));
    }
}

TEST_CASE("cfi: never exceeds the quantum information") {
    oracle::Rng rng(49);
    for (int k = 0; k < 200; ++k) {
        const MixedInstance inst = random_encoded_instance(rng);
        const CfiResult c = cfi(inst.rho, inst.drho, projective_measurement(rng.hermitian()));
        if (!c.unbounded) {
            CHECK(c.value <= qfi(inst.rho, inst.drho) + 1e-9);
        }
    }
}

TEST_CASE("cfi: computational basis is blind to the traceless-coefficient parameter") {
    // Non-selective encoding with axis z: the diagonal never moves with beta.
    const MeasurementFamily mf = MeasurementFamily::beta_parameter(0.4, 0.0);
    const EncodedFamily fam = EncodedFamily::non_selective(mf, QubitState(0.8, 1.1, 0.7));
    const std::array<double, 1> x{0.1};
    const CfiResult c = cfi(fam.state(x), fam.derivative(x, 0),
                            {Mat2{1.0, 0.0, 0.0, 0.0}, Mat2{0.0, 0.0, 0.0, 1.0}});
    CHECK_FALSE(c.unbounded);
    CHECK(c.value <= 1e-18);
}

TEST_CASE("cfi: incomplete measurements are rejected") {
    const MixedInstance inst = [] {
        oracle::Rng rng(50);
        return random_encoded_instance(rng);
    }();
    CHECK_THROWS_AS(cfi(inst.rho, inst.drho, {0.5 * Mat2::identity()}), std::invalid_argument);
}

TEST_CASE("qfi_reparametrize: direct substitution and the cosine chain") {
    CHECK(qfi_reparametrize(3.7, 1.0) == doctest::Approx(3.7));
    CHECK(qfi_reparametrize(4.0, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(qfi_reparametrize(1.0, 0.0), std::invalid_argument);

    // beta(x1) = alpha cos(x1): information in x1 equals information in beta
    // scaled by (alpha sin x1)^2.
    const double alpha = 0.35, x1 = 0.9;
    const QubitState probe = QubitState::plus();
    const MeasurementFamily chain = MeasurementFamily::beta_cosine(alpha, 0.0);
    const EncodedFamily chain_fam = EncodedFamily::non_selective(chain, probe);
    const std::array<double, 1> xc{x1};
    const double f_chain = qfi(chain_fam.state(xc), chain_fam.derivative(xc, 0));

    const MeasurementFamily base = MeasurementFamily::beta_parameter(alpha, 0.0);
    const EncodedFamily base_fam = EncodedFamily::non_selective(base, probe);
    const std::array<double, 1> xb{alpha * std::cos(x1)};
    const double f_beta = qfi(base_fam.state(xb), base_fam.derivative(xb, 0));

    const double dbeta_dx1 = -alpha * std::sin(x1);
    CHECK(f_chain == doctest::Approx(f_beta * dbeta_dx1 * dbeta_dx1).epsilon(1e-9));
    // Equivalently through the reparametrization helper: x1 as a function of
    // beta has slope 1/dbeta_dx1.
    CHECK(qfi_reparametrize(f_beta, 1.0 / dbeta_dx1) ==
          doctest::Approx(f_chain).epsilon(1e-9));
}
