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

#include "povmest/family.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

using namespace povmest;

namespace {
constexpr double pi = std::numbers::pi;

// Relative Frobenius agreement between analytic and central-difference
// derivatives of an encoded family. The scale floor keeps tiny derivatives
// from being compared against pure rounding noise in the difference stencil.
void check_derivative_against_fd(const EncodedFamily& family, std::span<const double> x,
                                 double rel_tol = 1e-6) {
    const auto eval = [&](std::span<const double> p) { return family.state(p); };
    for (std::size_t i = 0; i < family.dim(); ++i) {
        const Mat2 analytic = family.derivative(x, i);
        const Mat2 fd = oracle::central_difference(eval, x, i);
        const double scale = std::max(analytic.frobenius_norm(), 1e-3);
        CHECK((analytic - fd).frobenius_norm() / scale <= rel_tol);
    }
}
}  // namespace

TEST_CASE("MeasurementFamily presets produce valid POVMs with consistent partials") {
    oracle::Rng rng(31);
    for (int k = 0; k < 50; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const double theta = rng.uniform(0, 2 * pi);
        // Cosine presets: beta = alpha cos(x1) needs alpha <= 1/2 for validity.
        const double alpha_cos = rng.uniform(0.1, 0.5);
        const MeasurementFamily fams[] = {
            MeasurementFamily::alpha_parameter(beta, theta),
            MeasurementFamily::beta_parameter(alpha, theta),
            MeasurementFamily::direction_parameter(alpha, beta),
            MeasurementFamily::beta_cosine(alpha_cos, theta),
            MeasurementFamily::direction_beta_cosine(alpha_cos),
        };
        const double xs[] = {alpha, beta, theta, rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2)};
        for (std::size_t f = 0; f < std::size(fams); ++f) {
            const std::array<double, 1> x{xs[f]};
            CHECK(fams[f].valid_at(x));
            const TwoOutcomePovm povm = fams[f].povm(x);
            CHECK(is_psd(povm.effect(1)));
            CHECK(is_psd(povm.effect(2)));
        }
    }
}

TEST_CASE("coefficient partials match finite differences of (alpha, beta, theta)") {
    oracle::Rng rng(32);
    const MeasurementFamily fam = MeasurementFamily::direction_beta_cosine(0.35);
    for (int k = 0; k < 50; ++k) {
        const double x1 = rng.uniform(0.2, 1.3);
        const std::array<double, 1> x{x1};
        const MeasCoeffs c = fam.coeffs(x);
        const double h = 1e-6;
        const std::array<double, 1> xp{x1 + h}, xm{x1 - h};
        const MeasCoeffs cp = fam.coeffs(xp), cm = fam.coeffs(xm);
        CHECK(c.dalpha[0] == doctest::Approx((cp.alpha - cm.alpha) / (2 * h)).epsilon(1e-6));
        CHECK(c.dbeta[0] ==
              doctest::Approx((cp.beta - cm.beta) / (2 * h)).epsilon(1e-6).scale(1.0));
        CHECK(c.dtheta[0] == doctest::Approx((cp.theta - cm.theta) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("non-selective family derivative: closed form for alpha encoding") {
    // With alpha = x1 at fixed beta and axis z, the derivative is
    // (r h1 / 2) [sigma_rhat - (n.rhat) sigma_n] with h1 = dh/dalpha.
    oracle::Rng rng(33);
    for (int k = 0; k < 50; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const QubitState probe = rng.probe(1.0);
        const MeasurementFamily mf = MeasurementFamily::alpha_parameter(beta, 0.0);
        const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
        const std::array<double, 1> x{alpha};

        const double g1 = std::sqrt(alpha * alpha - beta * beta);
        const double g2 = std::sqrt((1 - alpha) * (1 - alpha) - beta * beta);
        const double h1 = alpha / g1 - (1 - alpha) / g2;
        const Vec3 w = probe.bloch();
        const Vec3 n{0, 0, 1};
        const Vec3 transverse = w - n * n.dot(w);
        const Mat2 expected = 0.5 * h1 * pauli_dot(transverse);
        CHECK((fam.derivative(x, 0) - expected).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("constant family has zero derivative") {
    const MeasurementFamily constant(
        1, [](std::span<const double>) {
            return MeasCoeffs{0.4, 0.1, 0.3, {0.0}, {0.0}, {0.0}};
        });
    const EncodedFamily fam =
        EncodedFamily::non_selective(constant, QubitState(0.7, 1.0, 0.5));
    const std::array<double, 1> x{0.123};
    CHECK(fam.derivative(x, 0).frobenius_norm() <= 1e-15);
}

TEST_CASE("analytic derivatives match finite differences over random families") {
    oracle::Rng rng(34);
    int done = 0;
    while (done < 200) {
        const auto [alpha, beta] = rng.coefficients();
        const double theta = rng.uniform(0, 2 * pi);
        const QubitState probe = rng.probe(0.98);
        const int which = done % 4;
        const std::array<double, 2> x2{alpha, theta};
        const std::array<double, 1> x1{alpha};
        if (which == 0) {
            const MeasurementFamily mf = MeasurementFamily::alpha_theta(beta);
            check_derivative_against_fd(EncodedFamily::non_selective(mf, probe), x2);
        } else if (which == 1) {
            const MeasurementFamily mf = MeasurementFamily::alpha_theta(beta);
            const EncodedFamily fam = EncodedFamily::selective(mf, probe, 1);
            if (fam.probability(x2) < 1e-3) {
                continue;  // keep away from the zero-probability regime
            }
            check_derivative_against_fd(fam, x2);
        } else if (which == 2) {
            const MeasurementFamily mf = MeasurementFamily::alpha_beta(theta);
            const std::array<double, 2> ab{alpha, beta};
            const EncodedFamily fam = EncodedFamily::selective(mf, probe, 2);
            if (fam.probability(ab) < 1e-3) {
                continue;
            }
            check_derivative_against_fd(fam, ab);
        } else {
            const MeasurementFamily mf = MeasurementFamily::alpha_parameter(beta, theta);
            check_derivative_against_fd(EncodedFamily::selective(mf, probe, 1), x1);
        }
        ++done;
    }
}

TEST_CASE("direction-only dependence: finite difference matches analytic") {
    // Probe along the axis at the probed point: the non-selective state is
    // (I + r sigma_n(theta))/2, so the alpha derivative vanishes identically
    // and all the information flows through theta.
    const double theta0 = 0.8;
    const MeasurementFamily mf = MeasurementFamily::alpha_theta(0.12);
    const QubitState probe = QubitState::from_bloch(
        measurement_axis(theta0, AxisConvention::sin_cos) * 0.7);
    const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
    const std::array<double, 2> x{0.4, theta0};
    CHECK(fam.derivative(x, 0).frobenius_norm() <= 1e-12);
    const auto eval = [&](std::span<const double> p) { return fam.state(p); };
    const Mat2 analytic = fam.derivative(x, 1);
    const Mat2 fd = oracle::central_difference(eval, x, 1);
    CHECK((analytic - fd).frobenius_norm() / analytic.frobenius_norm() <= 1e-6);
}

TEST_CASE("finite-difference mode agrees with the analytic mode") {
    oracle::Rng rng(35);
    for (int k = 0; k < 40; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const QubitState probe = rng.probe(0.95);
        const MeasurementFamily mf = MeasurementFamily::beta_theta(alpha);
        const std::array<double, 2> x{beta, rng.uniform(0, 2 * pi)};
        const EncodedFamily analytic = EncodedFamily::non_selective(mf, probe);
        const EncodedFamily fd =
            EncodedFamily::non_selective(mf, probe, DerivativeMode::finite_difference);
        for (std::size_t i = 0; i < 2; ++i) {
            const Mat2 a = analytic.derivative(x, i);
            const Mat2 b = fd.derivative(x, i);
            CHECK((a - b).frobenius_norm() <= 1e-6 * std::max(1.0, a.frobenius_norm()));
        }
    }
}

TEST_CASE("finite differences stay usable against the positivity boundary") {
    // beta = x1 evaluated within 2h of |beta| = alpha: one-sided stencil.
    const double alpha = 0.3;
    const MeasurementFamily mf = MeasurementFamily::beta_parameter(alpha, 0.0);
    const EncodedFamily fam =
        EncodedFamily::non_selective(mf, QubitState::plus(), DerivativeMode::finite_difference);
    const std::array<double, 1> x{alpha - 5e-8};
    const Mat2 d = fam.derivative(x, 0);
    CHECK(std::isfinite(d.frobenius_norm()));
    CHECK(d.frobenius_norm() > 1.0);  // derivative grows near the boundary
}

TEST_CASE("projective family: theta derivative is finite on the boundary") {
    // alpha = beta = 1/2 keeps one effect rank-one; only theta varies.
    const MeasurementFamily mf = MeasurementFamily::direction_parameter(0.5, 0.5);
    const EncodedFamily fam = EncodedFamily::non_selective(mf, QubitState(0.8, 0.7, 0.0));
    const std::array<double, 1> x{0.4};
    check_derivative_against_fd(fam, x);
}

TEST_CASE("zero-probability branch signals instead of fabricating a state") {
    const MeasurementFamily mf = MeasurementFamily::beta_parameter(0.5, 0.0);
    const EncodedFamily fam = EncodedFamily::selective(mf, QubitState::basis0(), 2);
    const std::array<double, 1> x{0.5};  // projective, branch 2 never fires
    CHECK(fam.probability(x) == doctest::Approx(0.0));
    CHECK_THROWS_AS(fam.state(x), ZeroProbabilityError);
}

TEST_CASE("branch_probability_derivative: named cases and completeness") {
    const QubitState plus = QubitState::plus();

    const MeasurementFamily alpha_mf = MeasurementFamily::alpha_parameter(0.1, 0.0);
    const std::array<double, 1> xa{0.4};
    CHECK(branch_probability_derivative(alpha_mf, plus, 1, xa)[0] ==
          doctest::Approx(1.0).epsilon(1e-14));

    const MeasurementFamily beta_mf = MeasurementFamily::beta_parameter(0.4, 0.0);
    const std::array<double, 1> xb{0.1};
    CHECK(branch_probability_derivative(beta_mf, plus, 1, xb)[0] ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(branch_probability_derivative(beta_mf, QubitState::basis0(), 1, xb)[0] ==
          doctest::Approx(1.0).epsilon(1e-14));

    oracle::Rng rng(36);
    for (int k = 0; k < 50; ++k) {
        const auto [alpha, beta] = rng.coefficients();
        const MeasurementFamily mf = MeasurementFamily::alpha_beta_theta();
        const QubitState probe = rng.probe(1.0);
        const std::array<double, 3> x{alpha, beta, rng.uniform(0, 2 * pi)};
        const auto d1 = branch_probability_derivative(mf, probe, 1, x);
        const auto d2 = branch_probability_derivative(mf, probe, 2, x);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(d1[i] + d2[i] == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("custom encoded family with analytic derivative") {
    // rho(x) = (I + 0.5 sz + x1 sx + x2 sy)/2 near the origin.
    const EncodedFamily fam = EncodedFamily::custom(
        2,
        [](std::span<const double> x) {
            return 0.5 * (Mat2::identity() + 0.5 * Mat2::pauli_z() + x[0] * Mat2::pauli_x() +
                          x[1] * Mat2::pauli_y());
        },
        [](std::span<const double>, std::size_t i) {
            return 0.5 * (i == 0 ? Mat2::pauli_x() : Mat2::pauli_y());
        });
    const std::array<double, 2> x{0.1, 0.05};
    CHECK(is_density(fam.state(x)));
    check_derivative_against_fd(fam, x);
}
