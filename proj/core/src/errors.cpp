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

#include "povmest/errors.hpp"

#include <cmath>
#include <stdexcept>

#include "povmest/fisher.hpp"
#include "povmest/tolerances.hpp"

namespace povmest {

WeightMatrix::WeightMatrix(RealMat m) : m_(std::move(m)) {
    if (m_.size() == 0) {
        throw std::invalid_argument("WeightMatrix: empty matrix");
    }
    if (!m_.is_symmetric()) {
        throw std::invalid_argument("WeightMatrix: matrix is not symmetric");
    }
    const SymEigen eig = sym_eigen(m_);
    if (eig.values.back() <= 0.0) {
        throw std::invalid_argument("WeightMatrix: matrix is not positive definite");
    }
}

WeightMatrix WeightMatrix::identity(std::size_t m) { return WeightMatrix(RealMat::identity(m)); }

std::string_view to_string(ErrorStatus s) {
    switch (s) {
        case ErrorStatus::ok:
            return "ok";
        case ErrorStatus::zero_information:
            return "zero-information";
        case ErrorStatus::singular_qfim:
            return "singular-qfim";
        case ErrorStatus::unachievable_qcrb:
            return "unachievable-qcrb";
    }
    return "unknown";
}

namespace {

ErrorResult flagged(ErrorStatus status) {
    ErrorResult r;
    r.status = status;
    if (status == ErrorStatus::zero_information) {
        r.unbounded = true;
        r.value = std::numeric_limits<double>::infinity();
    }
    return r;
}

// Scalar error of one encoded family: 1/sqrt(F) for a single parameter,
// sqrt(tr(W F^{-1})) otherwise. Flags instead of numbers on degeneracies.
ErrorResult family_error(const EncodedFamily& family, std::span<const double> x,
                         const WeightMatrix& w) {
    if (family.dim() == 1) {
        const double f = qfi(family.state(x), family.derivative(x, 0));
        if (f < tol::zero_information) {
            return flagged(ErrorStatus::zero_information);
        }
        ErrorResult r;
        r.value = 1.0 / std::sqrt(f);
        return r;
    }
    const FisherReport report = qfim(family, x);
    if (!report.achievable) {
        return flagged(ErrorStatus::unachievable_qcrb);
    }
    if (report.singular) {
        return flagged(ErrorStatus::singular_qfim);
    }
    ErrorResult r;
    r.value = std::sqrt(trace_weighted_inverse(w.matrix(), report.qfim));
    return r;
}

void check_arguments(const MeasurementFamily& mf, std::span<const double> x,
                     const WeightMatrix& w) {
    if (x.size() != mf.dim()) {
        throw std::invalid_argument("error functional: wrong parameter count");
    }
    if (w.size() != mf.dim()) {
        throw std::invalid_argument("error functional: weight matrix dimension mismatch");
    }
}

}  // namespace

ErrorResult or_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x, const WeightMatrix& w) {
    check_arguments(mf, x, w);
    ErrorResult out;
    out.value = 0.0;
    out.branch_contributions.assign(2, 0.0);
    for (int b = 1; b <= 2; ++b) {
        const EncodedFamily family = EncodedFamily::selective(mf, probe, b);
        const double q = family.probability(x);
        if (q < tol::probability_floor) {
            continue;  // dead branch contributes zero weight
        }
        const ErrorResult branch = family_error(family, x, w);
        if (!branch.ok()) {
            return flagged(branch.status);
        }
        out.branch_contributions[static_cast<std::size_t>(b - 1)] = q * branch.value;
        out.value += q * branch.value;
    }
    return out;
}

ErrorResult of_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x, const WeightMatrix& w) {
    check_arguments(mf, x, w);
    return family_error(EncodedFamily::non_selective(mf, probe), x, w);
}

ErrorResult or_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x) {
    return or_error(mf, probe, x, WeightMatrix::identity(mf.dim()));
}

ErrorResult of_error(const MeasurementFamily& mf, const QubitState& probe,
                     std::span<const double> x) {
    return of_error(mf, probe, x, WeightMatrix::identity(mf.dim()));
}

}  // namespace povmest
