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

/// Two-outcome qubit POVMs
///   E1 = alpha I + beta sigma_n,   E2 = (1 - alpha) I - beta sigma_n,
/// and the measurement-as-encoding maps they induce: the selective branch
/// states sqrt(E_i) rho sqrt(E_i) / tr(E_i rho) and the non-selective state
/// sum_i sqrt(E_i) rho sqrt(E_i).

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "povmest/mat2.hpp"
#include "povmest/qubit_state.hpp"

namespace povmest {

/// Raised when a selective branch with probability below the floor is asked
/// for its (undefined) post-measurement state.
struct ZeroProbabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TwoOutcomePovm {
  public:
    /// Requires 0 <= alpha <= 1 and |beta| <= min(alpha, 1 - alpha), which is
    /// exactly positivity of both effects; axis must be a unit vector.
    TwoOutcomePovm(double alpha, double beta, const Vec3& axis);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const Vec3& axis() const { return axis_; }

    /// E1 (outcome == 1) or E2 (outcome == 2). E1 + E2 == I exactly.
    Mat2 effect(int outcome) const;
    /// Closed-form PSD square root of the requested effect.
    Mat2 effect_sqrt(int outcome) const;

    static bool valid_coefficients(double alpha, double beta,
                                   double margin = 0.0) noexcept;

  private:
    double alpha_, beta_;
    Vec3 axis_;
};

/// One selective outcome: its probability and, when the probability is above
/// the floor, the normalized post-measurement state.
struct BranchOutcome {
    double probability = 0.0;
    std::optional<Mat2> state;

    bool zero_probability() const { return !state.has_value(); }
};

std::vector<BranchOutcome> encode_selective(const TwoOutcomePovm& povm, const Mat2& probe);
std::vector<BranchOutcome> encode_selective(const TwoOutcomePovm& povm, const QubitState& probe);

Mat2 encode_nonselective(const TwoOutcomePovm& povm, const Mat2& probe);
Mat2 encode_nonselective(const TwoOutcomePovm& povm, const QubitState& probe);

}  // namespace povmest
