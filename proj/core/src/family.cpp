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

#include <cmath>
#include <stdexcept>
#include <utility>

#include "povmest/tolerances.hpp"

namespace povmest {

namespace {

// Effect coefficients of one branch: E_b = id * I + sig * sigma_n.
struct BranchCoeffs {
    double id, sig;
    double did, dsig;  // partials with respect to one family parameter
};

BranchCoeffs branch_coeffs(const MeasCoeffs& c, int branch, std::size_t i) {
    if (branch == 1) {
        return {c.alpha, c.beta, c.dalpha[i], c.dbeta[i]};
    }
    return {1.0 - c.alpha, -c.beta, -c.dalpha[i], -c.dbeta[i]};
}

double safe_sqrt_derivative(double sqrt_val, double dval) {
    if (dval == 0.0) {
        return 0.0;
    }
    if (sqrt_val == 0.0) {
        throw std::domain_error(
            "EncodedFamily: analytic derivative diverges on the positivity boundary");
    }
    return dval / (2.0 * sqrt_val);
}

}  // namespace

Vec3 measurement_axis(double theta, AxisConvention conv) {
    if (conv == AxisConvention::sin_cos) {
        return {std::sin(theta), 0.0, std::cos(theta)};
    }
    return {std::cos(theta), 0.0, std::sin(theta)};
}

Vec3 measurement_axis_tangent(double theta, AxisConvention conv) {
    if (conv == AxisConvention::sin_cos) {
        return {std::cos(theta), 0.0, -std::sin(theta)};
    }
    return {-std::sin(theta), 0.0, std::cos(theta)};
}

MeasurementFamily::MeasurementFamily(std::size_t dim, CoeffFn fn, AxisConvention conv)
    : dim_(dim), fn_(std::move(fn)), conv_(conv) {
    if (dim_ == 0) {
        throw std::invalid_argument("MeasurementFamily: dimension must be >= 1");
    }
    if (!fn_) {
        throw std::invalid_argument("MeasurementFamily: missing coefficient function");
    }
}

MeasCoeffs MeasurementFamily::coeffs(std::span<const double> x) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("MeasurementFamily: wrong parameter count");
    }
    for (double xi : x) {
        if (!std::isfinite(xi)) {
            throw std::invalid_argument("MeasurementFamily: non-finite parameter");
        }
    }
    MeasCoeffs c = fn_(x);
    if (c.dalpha.size() != dim_ || c.dbeta.size() != dim_ || c.dtheta.size() != dim_) {
        throw std::invalid_argument("MeasurementFamily: partials have wrong dimension");
    }
    return c;
}

TwoOutcomePovm MeasurementFamily::povm(std::span<const double> x) const {
    const MeasCoeffs c = coeffs(x);
    return {c.alpha, c.beta, measurement_axis(c.theta, conv_)};
}

bool MeasurementFamily::valid_at(std::span<const double> x) const noexcept {
    try {
        const MeasCoeffs c = coeffs(x);
        return TwoOutcomePovm::valid_coefficients(c.alpha, c.beta);
    } catch (...) {
        return false;
    }
}

MeasurementFamily MeasurementFamily::alpha_parameter(double beta, double theta,
                                                     AxisConvention conv) {
    return {1, [beta, theta](std::span<const double> x) {
                return MeasCoeffs{x[0], beta, theta, {1.0}, {0.0}, {0.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::beta_parameter(double alpha, double theta,
                                                    AxisConvention conv) {
    return {1, [alpha, theta](std::span<const double> x) {
                return MeasCoeffs{alpha, x[0], theta, {0.0}, {1.0}, {0.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::direction_parameter(double alpha, double beta,
                                                         AxisConvention conv) {
    return {1, [alpha, beta](std::span<const double> x) {
                return MeasCoeffs{alpha, beta, x[0], {0.0}, {0.0}, {1.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::beta_cosine(double alpha, double theta,
                                                 AxisConvention conv) {
    return {1, [alpha, theta](std::span<const double> x) {
                return MeasCoeffs{
                    alpha, alpha * std::cos(x[0]), theta,
                    {0.0}, {-alpha * std::sin(x[0])}, {0.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::direction_beta_cosine(double alpha, AxisConvention conv) {
    return {1, [alpha](std::span<const double> x) {
                return MeasCoeffs{
                    alpha, alpha * std::cos(x[0]), x[0],
                    {0.0}, {-alpha * std::sin(x[0])}, {1.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::alpha_beta(double theta, AxisConvention conv) {
    return {2, [theta](std::span<const double> x) {
                return MeasCoeffs{x[0], x[1], theta, {1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::alpha_theta(double beta, AxisConvention conv) {
    return {2, [beta](std::span<const double> x) {
                return MeasCoeffs{x[0], beta, x[1], {1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::beta_theta(double alpha, AxisConvention conv) {
    return {2, [alpha](std::span<const double> x) {
                return MeasCoeffs{alpha, x[0], x[1], {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
            },
            conv};
}

MeasurementFamily MeasurementFamily::alpha_beta_theta(AxisConvention conv) {
    return {3, [](std::span<const double> x) {
                return MeasCoeffs{x[0],
                                  x[1],
                                  x[2],
                                  {1.0, 0.0, 0.0},
                                  {0.0, 1.0, 0.0},
                                  {0.0, 0.0, 1.0}};
            },
            conv};
}

std::vector<double> branch_probability_derivative(const MeasurementFamily& mf,
                                                  const QubitState& probe, int branch,
                                                  std::span<const double> x) {
    if (branch != 1 && branch != 2) {
        throw std::invalid_argument("branch_probability_derivative: branch must be 1 or 2");
    }
    const MeasCoeffs c = mf.coeffs(x);
    const Vec3 w = probe.bloch();
    const Vec3 n = measurement_axis(c.theta, mf.convention());
    const Vec3 np = measurement_axis_tangent(c.theta, mf.convention());
    std::vector<double> out(mf.dim());
    const double sign = branch == 1 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < mf.dim(); ++i) {
        out[i] = sign * (c.dalpha[i] + c.dbeta[i] * n.dot(w) + c.beta * c.dtheta[i] * np.dot(w));
    }
    return out;
}

EncodedFamily EncodedFamily::selective(MeasurementFamily mf, QubitState probe, int branch,
                                       DerivativeMode mode) {
    if (branch != 1 && branch != 2) {
        throw std::invalid_argument("EncodedFamily::selective: branch must be 1 or 2");
    }
    EncodedFamily f;
    f.dim_ = mf.dim();
    f.branch_ = branch == 1 ? EncodeBranch::selective_1 : EncodeBranch::selective_2;
    f.mode_ = mode;
    f.mf_.push_back(std::move(mf));
    f.probe_ = probe.matrix();
    return f;
}

EncodedFamily EncodedFamily::non_selective(MeasurementFamily mf, QubitState probe,
                                           DerivativeMode mode) {
    EncodedFamily f;
    f.dim_ = mf.dim();
    f.branch_ = EncodeBranch::non_selective;
    f.mode_ = mode;
    f.mf_.push_back(std::move(mf));
    f.probe_ = probe.matrix();
    return f;
}

EncodedFamily EncodedFamily::custom(std::size_t dim, EvalFn eval, DerivFn deriv) {
    if (dim == 0 || !eval) {
        throw std::invalid_argument("EncodedFamily::custom: need dim >= 1 and an eval function");
    }
    EncodedFamily f;
    f.dim_ = dim;
    f.branch_ = EncodeBranch::custom;
    f.mode_ = deriv ? DerivativeMode::analytic : DerivativeMode::finite_difference;
    f.eval_ = std::move(eval);
    f.deriv_ = std::move(deriv);
    return f;
}

Mat2 EncodedFamily::state(std::span<const double> x) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("EncodedFamily: wrong parameter count");
    }
    if (branch_ == EncodeBranch::custom) {
        Mat2 rho = eval_(x);
        if (!is_density(rho)) {
            throw std::invalid_argument("EncodedFamily: custom eval produced a non-density matrix");
        }
        return rho;
    }
    const TwoOutcomePovm povm = mf_.front().povm(x);
    if (branch_ == EncodeBranch::non_selective) {
        return encode_nonselective(povm, probe_);
    }
    const int b = branch_ == EncodeBranch::selective_1 ? 1 : 2;
    const double q = real_trace_product(povm.effect(b), probe_);
    if (q < tol::probability_floor) {
        throw ZeroProbabilityError("EncodedFamily: branch probability below floor");
    }
    const Mat2 s = povm.effect_sqrt(b);
    return (s * probe_ * s) * (1.0 / q);
}

double EncodedFamily::probability(std::span<const double> x) const {
    if (branch_ == EncodeBranch::custom || branch_ == EncodeBranch::non_selective) {
        return 1.0;
    }
    const TwoOutcomePovm povm = mf_.front().povm(x);
    const int b = branch_ == EncodeBranch::selective_1 ? 1 : 2;
    return real_trace_product(povm.effect(b), probe_);
}

Mat2 EncodedFamily::derivative(std::span<const double> x, std::size_t i) const {
    if (x.size() != dim_ || i >= dim_) {
        throw std::invalid_argument("EncodedFamily: bad derivative request");
    }
    if (branch_ == EncodeBranch::custom) {
        return deriv_ ? deriv_(x, i) : finite_difference(x, i);
    }
    if (mode_ == DerivativeMode::finite_difference) {
        return finite_difference(x, i);
    }
    return measurement_derivative(x, i);
}

std::vector<Mat2> EncodedFamily::derivatives(std::span<const double> x) const {
    std::vector<Mat2> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out[i] = derivative(x, i);
    }
    return out;
}

// Chain rule through (alpha, beta, theta). With u/v the effect eigenvalues
// along +/- n, sqrt(E) = (su + sv)/2 I + (su - sv)/2 sigma_n, so
// d sqrt(E) = (dsu + dsv)/2 I + (dsu - dsv)/2 sigma_n + (su - sv)/2 dtheta sigma_n'.
Mat2 EncodedFamily::measurement_derivative(std::span<const double> x, std::size_t i) const {
    const MeasurementFamily& mf = mf_.front();
    const MeasCoeffs c = mf.coeffs(x);
    if (!TwoOutcomePovm::valid_coefficients(c.alpha, c.beta)) {
        throw std::invalid_argument("EncodedFamily: invalid POVM coefficients at x");
    }
    const Mat2 sigma_n = pauli_dot(measurement_axis(c.theta, mf.convention()));
    const Mat2 sigma_np = pauli_dot(measurement_axis_tangent(c.theta, mf.convention()));

    Mat2 total{};        // sum over contributing branches of d(sqrt(E) rho sqrt(E))
    Mat2 branch_t{};     // sqrt(E_b) rho sqrt(E_b) for the selective branch
    Mat2 branch_dt{};
    const bool nonselective = branch_ == EncodeBranch::non_selective;
    const int wanted = branch_ == EncodeBranch::selective_1 ? 1 : 2;

    for (int b = 1; b <= 2; ++b) {
        if (!nonselective && b != wanted) {
            continue;
        }
        const BranchCoeffs bc = branch_coeffs(c, b, i);
        const double u = std::max(bc.id + bc.sig, 0.0);
        const double v = std::max(bc.id - bc.sig, 0.0);
        const double su = std::sqrt(u);
        const double sv = std::sqrt(v);
        const double dsu = safe_sqrt_derivative(su, bc.did + bc.dsig);
        const double dsv = safe_sqrt_derivative(sv, bc.did - bc.dsig);

        const Mat2 s = 0.5 * (su + sv) * Mat2::identity() + 0.5 * (su - sv) * sigma_n;
        const Mat2 ds = 0.5 * (dsu + dsv) * Mat2::identity() + 0.5 * (dsu - dsv) * sigma_n +
                        0.5 * (su - sv) * c.dtheta[i] * sigma_np;
        const Mat2 dt = ds * probe_ * s + s * probe_ * ds;
        if (nonselective) {
            total += dt;
        } else {
            branch_t = s * probe_ * s;
            branch_dt = dt;
        }
    }
    if (nonselective) {
        return total;
    }
    const double q = branch_t.trace().real();
    if (q < tol::probability_floor) {
        throw ZeroProbabilityError("EncodedFamily: branch probability below floor");
    }
    const double dq = branch_dt.trace().real();
    return branch_dt * (1.0 / q) - branch_t * (dq / (q * q));
}

// Central difference with step 1e-6 max(1, |x_i|); near a positivity boundary
// fall back to the second-order one-sided stencil on the valid side.
Mat2 EncodedFamily::finite_difference(std::span<const double> x, std::size_t i) const {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    std::vector<double> pt(x.begin(), x.end());
    const auto shifted = [&](double delta) {
        pt[i] = x[i] + delta;
        return std::span<const double>(pt);
    };
    const auto usable = [&](double delta) {
        if (branch_ == EncodeBranch::custom) {
            return true;
        }
        if (!mf_.front().valid_at(shifted(delta))) {
            return false;
        }
        return branch_ == EncodeBranch::non_selective ||
               probability(shifted(delta)) >= tol::probability_floor;
    };

    if (usable(h) && usable(-h)) {
        const Mat2 fp = state(shifted(h));
        const Mat2 fm = state(shifted(-h));
        return (fp - fm) * (0.5 / h);
    }
    if (usable(-h) && usable(-2 * h)) {
        const Mat2 f0 = state(shifted(0));
        const Mat2 fm = state(shifted(-h));
        const Mat2 fm2 = state(shifted(-2 * h));
        return (3.0 * f0 - 4.0 * fm + fm2) * (0.5 / h);
    }
    if (usable(h) && usable(2 * h)) {
        const Mat2 f0 = state(shifted(0));
        const Mat2 fp = state(shifted(h));
        const Mat2 fp2 = state(shifted(2 * h));
        return (-3.0 * f0 + 4.0 * fp - fp2) * (0.5 / h);
    }
    throw std::domain_error("EncodedFamily: no valid finite-difference stencil at x");
}

}  // namespace povmest
