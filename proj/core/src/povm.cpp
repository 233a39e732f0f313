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

#include "povmest/povm.hpp"

#include <cmath>

#include "povmest/tolerances.hpp"

namespace povmest {

TwoOutcomePovm::TwoOutcomePovm(double alpha, double beta, const Vec3& axis)
    : alpha_(alpha), beta_(beta), axis_(axis) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("TwoOutcomePovm: non-finite coefficients");
    }
    if (!valid_coefficients(alpha, beta)) {
        throw std::invalid_argument(
            "TwoOutcomePovm: need 0 <= alpha <= 1 and |beta| <= min(alpha, 1 - alpha)");
    }
    const double n = axis_.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("TwoOutcomePovm: axis must be a unit vector");
    }
    axis_ = axis_ * (1.0 / n);
}

bool TwoOutcomePovm::valid_coefficients(double alpha, double beta, double margin) noexcept {
    return alpha >= margin && alpha <= 1.0 - margin &&
           std::abs(beta) <= std::min(alpha, 1.0 - alpha) - margin;
}

Mat2 TwoOutcomePovm::effect(int outcome) const {
    if (outcome != 1 && outcome != 2) {
        throw std::invalid_argument("TwoOutcomePovm::effect: outcome must be 1 or 2");
    }
    const Mat2 e1 = alpha_ * Mat2::identity() + beta_ * pauli_dot(axis_);
    // The complement is materialized as I - E1 so completeness is exact.
    return outcome == 1 ? e1 : Mat2::identity() - e1;
}

Mat2 TwoOutcomePovm::effect_sqrt(int outcome) const {
    const double id = outcome == 1 ? alpha_ : 1.0 - alpha_;
    const double sig = outcome == 1 ? beta_ : -beta_;
    // Eigenvalues along +/- axis; both nonnegative by the validity constraint.
    const double su = std::sqrt(std::max(id + sig, 0.0));
    const double sv = std::sqrt(std::max(id - sig, 0.0));
    return 0.5 * (su + sv) * Mat2::identity() + 0.5 * (su - sv) * pauli_dot(axis_);
}

std::vector<BranchOutcome> encode_selective(const TwoOutcomePovm& povm, const Mat2& probe) {
    if (!is_density(probe)) {
        throw std::invalid_argument("encode_selective: probe is not a density matrix");
    }
    std::vector<BranchOutcome> out(2);
    for (int i = 1; i <= 2; ++i) {
        const double q = real_trace_product(povm.effect(i), probe);
        BranchOutcome& branch = out[static_cast<std::size_t>(i - 1)];
        branch.probability = q;
        if (q >= tol::probability_floor) {
            const Mat2 s = povm.effect_sqrt(i);
            branch.state = (s * probe * s) * (1.0 / q);
        }
    }
    return out;
}

std::vector<BranchOutcome> encode_selective(const TwoOutcomePovm& povm, const QubitState& probe) {
    return encode_selective(povm, probe.matrix());
}

Mat2 encode_nonselective(const TwoOutcomePovm& povm, const Mat2& probe) {
    if (!is_density(probe)) {
        throw std::invalid_argument("encode_nonselective: probe is not a density matrix");
    }
    const Mat2 s1 = povm.effect_sqrt(1);
    const Mat2 s2 = povm.effect_sqrt(2);
    return s1 * probe * s1 + s2 * probe * s2;
}

Mat2 encode_nonselective(const TwoOutcomePovm& povm, const QubitState& probe) {
    return encode_nonselective(povm, probe.matrix());
}

}  // namespace povmest
