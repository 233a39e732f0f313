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

/// Numeric tolerances shared across the library.  All inputs are built from
/// closed forms in double precision, so violations of structural properties
/// (hermiticity, positivity, completeness) are either rounding-sized or O(1);
/// the thresholds below separate those two regimes.

#pragma once

namespace povmest::tol {

/// Absolute tolerance for hermiticity / PSD / completeness checks.
inline constexpr double structural = 1e-12;

/// Eigenvalue support cutoff: lambda_mu + lambda_nu below this is treated as
/// out of support and the corresponding SLD matrix element is set to zero.
inline constexpr double support_cutoff = 1e-12;

/// Tracelessness tolerance for state derivatives.
inline constexpr double traceless = 1e-10;

/// Largest admissible |entry| of the incompatibility matrix for the matrix
/// bound to count as achievable.
inline constexpr double achievable = 1e-9;

/// Relative singular-value ratio (smallest/largest) below which a Fisher
/// information matrix counts as singular.
inline constexpr double singular_ratio = 1e-10;

/// Outcome probabilities below this are treated as zero-probability branches.
inline constexpr double probability_floor = 1e-14;

/// Scalar Fisher information below this is a zero-information encoding.
inline constexpr double zero_information = 1e-12;

/// Probability floor below which a detection outcome with a non-vanishing
/// probability derivative signals unbounded classical information.
inline constexpr double cfi_derivative_floor = 1e-10;

/// Derivative-vanishing threshold for the commutator criterion.
inline constexpr double commuting = 1e-10;

}  // namespace povmest::tol
