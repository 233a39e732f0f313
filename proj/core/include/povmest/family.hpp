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

/// Parametrized measurement families x -> POVM(alpha(x), beta(x), theta(x))
/// and the differentiable encoded-state families they induce. Derivatives are
/// analytic (chain rule through the coefficient partials) with a boundary
/// aware finite-difference fallback.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "povmest/mat2.hpp"
#include "povmest/povm.hpp"
#include "povmest/qubit_state.hpp"

namespace povmest {

/// Orientation convention for the measurement axis as a function of theta.
enum class AxisConvention {
    sin_cos,  ///< n(theta) = (sin theta, 0, cos theta) — library default
    cos_sin,  ///< n(theta) = (cos theta, 0, sin theta)
};

Vec3 measurement_axis(double theta, AxisConvention conv);
/// d n(theta) / d theta.
Vec3 measurement_axis_tangent(double theta, AxisConvention conv);

/// Coefficients (alpha, beta, theta) at one parameter point together with
/// their partial derivatives with respect to each family parameter.
struct MeasCoeffs {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0;
    std::vector<double> dalpha;
    std::vector<double> dbeta;
    std::vector<double> dtheta;
};

class MeasurementFamily {
  public:
    using CoeffFn = std::function<MeasCoeffs(std::span<const double>)>;

    MeasurementFamily(std::size_t dim, CoeffFn fn,
                      AxisConvention conv = AxisConvention::sin_cos);

    std::size_t dim() const { return dim_; }
    AxisConvention convention() const { return conv_; }

    MeasCoeffs coeffs(std::span<const double> x) const;
    TwoOutcomePovm povm(std::span<const double> x) const;
    /// True when the induced POVM coefficients are valid at x.
    bool valid_at(std::span<const double> x) const noexcept;

    // Single-parameter presets. theta-independent presets keep the axis fixed.
    static MeasurementFamily alpha_parameter(double beta, double theta,
                                             AxisConvention conv = AxisConvention::sin_cos);
    static MeasurementFamily beta_parameter(double alpha, double theta,
                                            AxisConvention conv = AxisConvention::sin_cos);
    static MeasurementFamily direction_parameter(double alpha, double beta,
                                                 AxisConvention conv = AxisConvention::sin_cos);
    /// beta(x1) = alpha cos(x1) at fixed axis.
    static MeasurementFamily beta_cosine(double alpha, double theta,
                                         AxisConvention conv = AxisConvention::sin_cos);
    /// theta = x1 and beta = alpha cos(x1) jointly.
    static MeasurementFamily direction_beta_cosine(double alpha,
                                                   AxisConvention conv = AxisConvention::sin_cos);

    // Multi-parameter presets.
    static MeasurementFamily alpha_beta(double theta,
                                        AxisConvention conv = AxisConvention::sin_cos);
    static MeasurementFamily alpha_theta(double beta,
                                         AxisConvention conv = AxisConvention::sin_cos);
    static MeasurementFamily beta_theta(double alpha,
                                        AxisConvention conv = AxisConvention::sin_cos);
    static MeasurementFamily alpha_beta_theta(AxisConvention conv = AxisConvention::sin_cos);

  private:
    std::size_t dim_;
    CoeffFn fn_;
    AxisConvention conv_;
};

/// dQ_branch/dx_i = tr[(dE_branch/dx_i) rho] for every parameter index i.
/// The two branches sum to zero componentwise since E1 + E2 == I.
std::vector<double> branch_probability_derivative(const MeasurementFamily& mf,
                                                  const QubitState& probe, int branch,
                                                  std::span<const double> x);

enum class EncodeBranch { selective_1, selective_2, non_selective, custom };
enum class DerivativeMode { analytic, finite_difference };

/// A differentiable map x -> density matrix. Measurement-backed families are
/// produced by the selective / non_selective factories; arbitrary encodings
/// enter through custom().
class EncodedFamily {
  public:
    using EvalFn = std::function<Mat2(std::span<const double>)>;
    using DerivFn = std::function<Mat2(std::span<const double>, std::size_t)>;

    std::size_t dim() const { return dim_; }
    EncodeBranch branch() const { return branch_; }
    DerivativeMode derivative_mode() const { return mode_; }

    /// Encoded density matrix at x. Throws ZeroProbabilityError when a
    /// selective branch has probability below the floor.
    Mat2 state(std::span<const double> x) const;
    /// Branch probability at x (1 for non-selective and custom families).
    double probability(std::span<const double> x) const;
    Mat2 derivative(std::span<const double> x, std::size_t i) const;
    std::vector<Mat2> derivatives(std::span<const double> x) const;

    static EncodedFamily selective(MeasurementFamily mf, QubitState probe, int branch,
                                   DerivativeMode mode = DerivativeMode::analytic);
    static EncodedFamily non_selective(MeasurementFamily mf, QubitState probe,
                                       DerivativeMode mode = DerivativeMode::analytic);
    /// User-supplied encoding; finite differences are used when no derivative
    /// function is given (plain central steps, no boundary probing).
    static EncodedFamily custom(std::size_t dim, EvalFn eval, DerivFn deriv = nullptr);

  private:
    EncodedFamily() = default;

    Mat2 measurement_derivative(std::span<const double> x, std::size_t i) const;
    Mat2 finite_difference(std::span<const double> x, std::size_t i) const;

    std::size_t dim_ = 0;
    EncodeBranch branch_ = EncodeBranch::custom;
    DerivativeMode mode_ = DerivativeMode::analytic;
    std::vector<MeasurementFamily> mf_;  // empty or one element
    Mat2 probe_{};
    EvalFn eval_;
    DerivFn deriv_;
};

}  // namespace povmest
