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

/// Estimation-error functionals for measurement-encoded parameters.
///
/// Outcome-remembered: sum_i Q_i / sqrt(F(rho_i)) for one parameter, and
/// sum_i Q_i sqrt(tr(W F^{-1}(rho_i))) for several. Outcome-forgotten: the
/// same with the non-selective encoded state and no branch average. The
/// multiparameter forms are only defined when each contributing matrix bound
/// is achievable and invertible; anything else is reported through a status
/// flag instead of a number.

#pragma once

#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "povmest/family.hpp"
#include "povmest/smallmat.hpp"

namespace povmest {

/// Real symmetric positive-definite cost matrix.
class WeightMatrix {
  public:
    explicit WeightMatrix(RealMat m);
    static WeightMatrix identity(std::size_t m);

    const RealMat& matrix() const { return m_; }
    std::size_t size() const { return m_.size(); }

  private:
    RealMat m_;
};

enum class ErrorStatus {
    ok,
    zero_information,
    singular_qfim,
    unachievable_qcrb,
};

std::string_view to_string(ErrorStatus s);

struct ErrorResult {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool unbounded = false;
    ErrorStatus status = ErrorStatus::ok;
    /// Per-branch terms of the outcome-remembered sum (empty for forgotten).
    std::vector<double> branch_contributions;

    bool ok() const { return status == ErrorStatus::ok && !unbounded; }
    /// Finite value when ok, +infinity otherwise (minimization-friendly).
    double value_or_infinity() const {
        return ok() ? value : std::numeric_limits<double>::infinity();
    }
};

ErrorResult or_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x, const WeightMatrix& w);
ErrorResult of_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x, const WeightMatrix& w);

/// Identity-weight conveniences.
ErrorResult or_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x);
ErrorResult of_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x);

}  // namespace povmest
