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

/// Derivative-free probe optimization over the Bloch ball: a deterministic
/// coarse grid over (r, phi1, phi2) followed by Nelder-Mead refinement from
/// the best grid point. When the measurement axis stays in the x-z plane the
/// phi2 axis collapses to {0, pi}.

#pragma once

#include <span>

#include "povmest/errors.hpp"

namespace povmest {

enum class ErrorObjective { outcome_remembered, outcome_forgotten };

struct OptimizerConfig {
    int r_points = 21;
    int phi1_points = 25;
    int phi2_points = 25;
    /// When > 0, caps the number of coarse-grid evaluations by shrinking the
    /// per-axis counts proportionally. A budget of 1 evaluates the single
    /// probe (r=0, phi1=0, phi2=0) and skips refinement.
    long budget = 0;
    int refine_max_iter = 300;
    double refine_shrink_tol = 1e-10;
    /// Restrict phi2 to {0, pi}; valid for every family built from an axis in
    /// the x-z plane (the library convention).
    bool reduce_phi2 = true;
};

struct ProbeOptimum {
    QubitState best_probe;
    double best_value = 0.0;
    ErrorStatus status = ErrorStatus::ok;
    long evaluations = 0;
};

ProbeOptimum optimize_probe(ErrorObjective objective, const MeasurementFamily& mf,
                            std::span<const double> x, const WeightMatrix& w,
                            const OptimizerConfig& config = {});

ProbeOptimum optimize_probe(ErrorObjective objective, const MeasurementFamily& mf,
                            std::span<const double> x, long budget);

}  // namespace povmest
