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

/// Mechanical checkers for the structural criteria of measurement-encoded
/// multiparameter estimation with qubit probes:
///  - achievability of the matrix bound (pairwise real-ratio test on the
///    eigenbasis off-diagonals, cross-validated by the incompatibility
///    matrix);
///  - invertibility of the Fisher matrix and its biconditional link, under
///    achievability, with the commutator of the state derivatives;
///  - the named two- and three-parameter estimation cases and the scan
///    comparing outcome-remembered against outcome-forgotten precision.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "povmest/errors.hpp"
#include "povmest/family.hpp"
#include "povmest/fisher.hpp"
#include "povmest/optimize.hpp"

namespace povmest {

struct CriterionVerdict {
    bool achievable = false;
    bool qfim_invertible = false;
    /// Encoded state is maximally mixed; achievability holds degenerately.
    bool degenerate_mixed = false;
    /// max over pairs of |Im(s_i conj(s_j))| / (|s_i| |s_j|), zero when a
    /// pair's product vanishes (the ratio constant then exists degenerately).
    double offdiag_ratio_imag = 0.0;
    /// max over pairs of the Frobenius norm of [d_i rho, d_j rho].
    double derivative_commutator_norm = 0.0;
    double max_abs_uhlmann = 0.0;
    double sv_ratio = 0.0;
    double qfim_det = 0.0;
    /// Under achievability the theory requires singular <=> commuting
    /// derivatives; false when the numeric verdicts disagree.
    bool biconditional_consistent = true;
};

CriterionVerdict check_achievability(const EncodedFamily& family, std::span<const double> x);

/// Two-parameter families only.
CriterionVerdict check_invertibility(const EncodedFamily& family, std::span<const double> x);

/// The four named estimation tasks: which measurement coefficients /
/// direction angle are promoted to parameters of interest.
enum class CaseId {
    coefficients,            ///< (alpha, beta), case I
    alpha_direction,         ///< (alpha, theta), case II
    beta_direction,          ///< (beta, theta), case III
    all_three,               ///< (alpha, beta, theta), case IV
};

enum class EncodeMode { branch_1, branch_2, forgotten };

struct CaseConfig {
    CaseId id;
    double alpha, beta, theta;
    QubitState probe;
    EncodeMode mode = EncodeMode::forgotten;
    AxisConvention convention = AxisConvention::sin_cos;
};

struct CaseReport {
    CriterionVerdict verdict;
    FisherReport fisher;
};

CaseReport run_case(const CaseConfig& cfg);

/// Probe with Bloch vector sign * r * dn/dtheta, orthogonal to the axis.
QubitState axis_orthogonal_probe(double r, double theta, AxisConvention conv, int sign = -1);

/// Parameter scan comparing optimized outcome-remembered and outcome-
/// forgotten errors.
enum class ScanScenario {
    beta_estimation,        ///< x1 = beta at fixed alpha, fixed axis
    alpha_estimation,       ///< x1 = alpha at fixed beta, fixed axis
    theta_beta_estimation,  ///< x1 = theta with beta = alpha cos(theta)
};

struct ScanRow {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0;
    double or_value = 0.0;
    double of_value = 0.0;
    double difference = 0.0;
    double or_r = 0.0, or_phi1 = 0.0, or_phi2 = 0.0;
    double of_r = 0.0, of_phi1 = 0.0, of_phi2 = 0.0;
    ErrorStatus status = ErrorStatus::ok;
};

struct ScanGrid {
    std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5};
    int axis_points = 60;
    /// Margin in ratio units (beta/alpha) or radians (theta axis).
    double margin = 5e-3;
    OptimizerConfig optimizer{};
    AxisConvention convention = AxisConvention::sin_cos;
};

struct ScanSummary {
    ScanScenario scenario{};
    std::vector<ScanRow> rows;
    double min_difference = 0.0;  ///< over ok rows
    int ok_rows = 0;
    int negative_rows = 0;  ///< ok rows with difference < -1e-6
};

ScanSummary error_gap_scan(ScanScenario scenario, const ScanGrid& grid);

/// Deterministic random-instance audits used by the check subcommands.
struct AuditConfig {
    int instances = 100;
    std::uint64_t seed = 20260809;
    AxisConvention convention = AxisConvention::sin_cos;
};

struct CaseAuditRow {
    CaseConfig cfg;
    CriterionVerdict verdict;
    bool claim_ok = false;
};

/// Per-case structural claims:
///  - coefficients / all_three: every instance singular;
///  - alpha_direction / beta_direction: axis-orthogonal probes with r < 1
///    give an achievable and invertible Fisher matrix, r = 1 gives singular.
std::vector<CaseAuditRow> audit_case(CaseId id, const AuditConfig& cfg);

struct BiconditionalRow {
    CaseConfig cfg;
    CriterionVerdict verdict;
    bool commuting = false;
    bool agrees = false;
};

/// Random achievable two-parameter families; checks that the singularity
/// verdict coincides with commuting derivatives in every instance.
std::vector<BiconditionalRow> audit_invertibility_biconditional(const AuditConfig& cfg);

struct AlignmentAuditRow {
    double phi1 = 0.0;
    double x2 = 0.0;
    double commutator_norm = 0.0;
    bool tangent_condition = false;  ///< tan(x2) == tan(phi1 - 2 x2) to 1e-9
    bool commutator_vanishes = false;
    bool agrees = false;
};

/// Forgotten-outcome (alpha, theta) estimation: commutator of the state
/// derivatives against the tangent relation tan(x2) = tan(phi1 - 2 x2).
/// Pairs are drawn from generic positions plus both special loci
/// (phi1 = 3 x2 and phi1 = x2) so the relation is exercised, not vacuous.
std::vector<AlignmentAuditRow> audit_direction_alignment(int pairs, std::uint64_t seed,
                                                         double alpha, double beta, double r,
                                                         AxisConvention conv);

}  // namespace povmest
