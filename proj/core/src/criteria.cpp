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

#include "povmest/criteria.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "povmest/tolerances.hpp"

namespace povmest {

namespace {

constexpr double pi = std::numbers::pi;

cdouble bra_op_ket(const std::array<cdouble, 2>& bra, const Mat2& op,
                   const std::array<cdouble, 2>& ket) {
    const cdouble r0 = op.a00 * ket[0] + op.a01 * ket[1];
    const cdouble r1 = op.a10 * ket[0] + op.a11 * ket[1];
    return std::conj(bra[0]) * r0 + std::conj(bra[1]) * r1;
}

MeasurementFamily case_family(const CaseConfig& cfg) {
    switch (cfg.id) {
        case CaseId::coefficients:
            return MeasurementFamily::alpha_beta(cfg.theta, cfg.convention);
        case CaseId::alpha_direction:
            return MeasurementFamily::alpha_theta(cfg.beta, cfg.convention);
        case CaseId::beta_direction:
            return MeasurementFamily::beta_theta(cfg.alpha, cfg.convention);
        case CaseId::all_three:
            return MeasurementFamily::alpha_beta_theta(cfg.convention);
    }
    throw std::invalid_argument("run_case: unknown case id");
}

std::vector<double> case_point(const CaseConfig& cfg) {
    switch (cfg.id) {
        case CaseId::coefficients:
            return {cfg.alpha, cfg.beta};
        case CaseId::alpha_direction:
            return {cfg.alpha, cfg.theta};
        case CaseId::beta_direction:
            return {cfg.beta, cfg.theta};
        case CaseId::all_three:
            return {cfg.alpha, cfg.beta, cfg.theta};
    }
    throw std::invalid_argument("run_case: unknown case id");
}

EncodedFamily case_encoded(const CaseConfig& cfg) {
    MeasurementFamily mf = case_family(cfg);
    switch (cfg.mode) {
        case EncodeMode::branch_1:
            return EncodedFamily::selective(std::move(mf), cfg.probe, 1);
        case EncodeMode::branch_2:
            return EncodedFamily::selective(std::move(mf), cfg.probe, 2);
        case EncodeMode::forgotten:
            return EncodedFamily::non_selective(std::move(mf), cfg.probe);
    }
    throw std::invalid_argument("run_case: unknown encode mode");
}

double max_pairwise_commutator(const std::vector<Mat2>& d) {
    double m = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            m = std::max(m, commutator(d[i], d[j]).frobenius_norm());
        }
    }
    return m;
}

}  // namespace

CriterionVerdict check_achievability(const EncodedFamily& family, std::span<const double> x) {
    if (family.dim() < 2) {
        throw std::invalid_argument("check_achievability: need at least two parameters");
    }
    const Mat2 rho = family.state(x);
    const std::vector<Mat2> drho = family.derivatives(x);
    const EigenPair2 eig = eig_hermitian(rho);

    CriterionVerdict v;
    v.degenerate_mixed = eig.lambda0 - eig.lambda1 < tol::structural;
    v.derivative_commutator_norm = max_pairwise_commutator(drho);

    std::vector<cdouble> s(family.dim());
    for (std::size_t i = 0; i < family.dim(); ++i) {
        s[i] = bra_op_ket(eig.e0, drho[i], eig.e1);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const double scale = std::abs(s[i]) * std::abs(s[j]);
            if (scale < 1e-30) {
                continue;  // a vanishing off-diagonal: the real ratio exists degenerately
            }
            const double ratio = std::abs(std::imag(s[i] * std::conj(s[j]))) / scale;
            v.offdiag_ratio_imag = std::max(v.offdiag_ratio_imag, ratio);
        }
    }
    v.achievable = v.degenerate_mixed || v.offdiag_ratio_imag <= tol::achievable;

    // Cross-validate against the incompatibility matrix of the Fisher layer.
    const FisherReport report = qfim(family, x);
    v.max_abs_uhlmann = report.uhlmann.max_abs();
    v.sv_ratio = report.sv_ratio;
    v.qfim_det = report.qfim_det;
    v.qfim_invertible = !report.singular;
    return v;
}

CriterionVerdict check_invertibility(const EncodedFamily& family, std::span<const double> x) {
    if (family.dim() != 2) {
        throw std::invalid_argument("check_invertibility: family must have two parameters");
    }
    CriterionVerdict v = check_achievability(family, x);
    if (v.achievable) {
        const bool commuting = v.derivative_commutator_norm <= tol::commuting;
        v.biconditional_consistent = (!v.qfim_invertible) == commuting;
    }
    return v;
}

CaseReport run_case(const CaseConfig& cfg) {
    if (!TwoOutcomePovm::valid_coefficients(cfg.alpha, cfg.beta)) {
        throw std::invalid_argument("run_case: invalid measurement coefficients");
    }
    const EncodedFamily family = case_encoded(cfg);
    const std::vector<double> x = case_point(cfg);
    CaseReport report{family.dim() == 2 ? check_invertibility(family, x)
                                        : check_achievability(family, x),
                      qfim(family, x)};
    return report;
}

QubitState axis_orthogonal_probe(double r, double theta, AxisConvention conv, int sign) {
    const Vec3 t = measurement_axis_tangent(theta, conv);
    return QubitState::from_bloch(t * (static_cast<double>(sign) * r));
}

ScanSummary error_gap_scan(ScanScenario scenario, const ScanGrid& grid) {
    ScanSummary out;
    out.scenario = scenario;
    out.min_difference = std::numeric_limits<double>::infinity();

    const int n = std::max(grid.axis_points, 1);
    const WeightMatrix w = WeightMatrix::identity(1);
    for (double alpha : grid.alphas) {
        for (int k = 0; k < n; ++k) {
            const double t = n == 1 ? 0.5
                                    : grid.margin + (1.0 - 2.0 * grid.margin) *
                                                        static_cast<double>(k) /
                                                        static_cast<double>(n - 1);
            ScanRow row;
            row.alpha = alpha;
            MeasurementFamily mf = [&]() {
                switch (scenario) {
                    case ScanScenario::beta_estimation:
                        row.beta = t * alpha;
                        row.theta = 0.0;
                        return MeasurementFamily::beta_parameter(alpha, 0.0, grid.convention);
                    case ScanScenario::alpha_estimation:
                        row.beta = t * alpha;
                        row.theta = 0.0;
                        return MeasurementFamily::alpha_parameter(row.beta, 0.0,
                                                                  grid.convention);
                    case ScanScenario::theta_beta_estimation: {
                        row.theta = grid.margin + (pi / 2 - 2.0 * grid.margin) *
                                                      static_cast<double>(k) /
                                                      static_cast<double>(std::max(n - 1, 1));
                        row.beta = alpha * std::cos(row.theta);
                        return MeasurementFamily::direction_beta_cosine(alpha, grid.convention);
                    }
                }
                throw std::invalid_argument("error_gap_scan: unknown scenario");
            }();
            const double x1 = scenario == ScanScenario::beta_estimation    ? row.beta
                              : scenario == ScanScenario::alpha_estimation ? row.alpha
                                                                           : row.theta;
            const std::array<double, 1> x{x1};

            const ProbeOptimum best_or = optimize_probe(ErrorObjective::outcome_remembered, mf,
                                                        x, w, grid.optimizer);
            const ProbeOptimum best_of = optimize_probe(ErrorObjective::outcome_forgotten, mf,
                                                        x, w, grid.optimizer);
            row.or_value = best_or.best_value;
            row.of_value = best_of.best_value;
            row.or_r = best_or.best_probe.r();
            row.or_phi1 = best_or.best_probe.phi1();
            row.or_phi2 = best_or.best_probe.phi2();
            row.of_r = best_of.best_probe.r();
            row.of_phi1 = best_of.best_probe.phi1();
            row.of_phi2 = best_of.best_probe.phi2();
            if (best_or.status != ErrorStatus::ok) {
                row.status = best_or.status;
            } else if (best_of.status != ErrorStatus::ok) {
                row.status = best_of.status;
            }
            if (row.status == ErrorStatus::ok) {
                row.difference = row.or_value - row.of_value;
                out.min_difference = std::min(out.min_difference, row.difference);
                ++out.ok_rows;
                if (row.difference < -1e-6) {
                    ++out.negative_rows;
                }
            } else {
                row.difference = std::numeric_limits<double>::quiet_NaN();
            }
            out.rows.push_back(row);
        }
    }
    return out;
}

namespace {

struct InstanceSampler {
    std::mt19937_64 rng;
    explicit InstanceSampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    // Coefficients kept 0.05 away from the positivity boundary.
    std::pair<double, double> coefficients() {
        const double alpha = uniform(0.12, 0.88);
        const double bmax = std::min(alpha, 1.0 - alpha) - 0.05;
        const double beta = uniform(0.02, bmax);
        return {alpha, beta};
    }
    QubitState probe(double rmax = 0.95) {
        return {uniform(0.0, rmax), uniform(0.0, pi), uniform(0.0, 2.0 * pi)};
    }
};

}  // namespace

std::vector<CaseAuditRow> audit_case(CaseId id, const AuditConfig& cfg) {
    InstanceSampler sampler(cfg.seed);
    std::vector<CaseAuditRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.instances));

    const bool direction_case = id == CaseId::alpha_direction || id == CaseId::beta_direction;
    for (int k = 0; k < cfg.instances; ++k) {
        const auto [alpha, beta] = sampler.coefficients();
        const double theta = sampler.uniform(0.0, 2.0 * pi);
        CaseAuditRow row{CaseConfig{id, alpha, beta, theta, QubitState::maximally_mixed(),
                                    EncodeMode::forgotten, cfg.convention},
                         CriterionVerdict{}, false};
        if (direction_case) {
            // Axis-orthogonal probes; every 10th instance pure to exercise the
            // singular boundary r = 1.
            const bool pure = k % 10 == 9;
            const double r = pure ? 1.0 : sampler.uniform(0.1, 0.95);
            const int sign = k % 2 == 0 ? -1 : 1;
            row.cfg.probe = axis_orthogonal_probe(r, theta, cfg.convention, sign);
            row.cfg.mode = k % 3 == 0 ? EncodeMode::branch_2 : EncodeMode::branch_1;
            row.verdict = run_case(row.cfg).verdict;
            row.claim_ok = pure ? !row.verdict.qfim_invertible
                                : row.verdict.qfim_invertible && row.verdict.achievable &&
                                      row.verdict.max_abs_uhlmann <= tol::achievable;
        } else {
            row.cfg.probe = sampler.probe(k % 10 == 9 ? 1.0 : 0.95);
            row.cfg.mode = k % 3 == 0   ? EncodeMode::branch_1
                           : k % 3 == 1 ? EncodeMode::branch_2
                                        : EncodeMode::forgotten;
            row.verdict = run_case(row.cfg).verdict;
            row.claim_ok = !row.verdict.qfim_invertible;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<BiconditionalRow> audit_invertibility_biconditional(const AuditConfig& cfg) {
    InstanceSampler sampler(cfg.seed);
    std::vector<BiconditionalRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.instances));

    for (int k = 0; k < cfg.instances; ++k) {
        const auto [alpha, beta] = sampler.coefficients();
        const double theta = sampler.uniform(0.0, 2.0 * pi);
        // Achievability is guaranteed by keeping all Bloch data in the x-z
        // plane (real matrices throughout). Mix generic probes with the
        // engineered singular loci: coefficient pairs and pure orthogonal
        // probes of the direction cases.
        BiconditionalRow row{CaseConfig{CaseId::alpha_direction, alpha, beta, theta,
                                        QubitState::maximally_mixed(), EncodeMode::forgotten,
                                        cfg.convention},
                             CriterionVerdict{}, false, false};
        const int kind = k % 5;
        if (kind == 0) {
            row.cfg.id = CaseId::coefficients;
            row.cfg.probe = sampler.probe();  // any probe: singular side
            row.cfg.mode = k % 2 == 0 ? EncodeMode::branch_1 : EncodeMode::forgotten;
            // Keep the probe in the x-z plane for exact realness.
            row.cfg.probe = QubitState(row.cfg.probe.r(), row.cfg.probe.phi1(),
                                       k % 4 == 0 ? 0.0 : pi);
        } else if (kind == 1) {
            row.cfg.probe = axis_orthogonal_probe(1.0, theta, cfg.convention, -1);
            row.cfg.mode = EncodeMode::branch_1;  // pure orthogonal: singular side
        } else {
            row.cfg.id = k % 2 == 0 ? CaseId::alpha_direction : CaseId::beta_direction;
            row.cfg.probe = QubitState(sampler.uniform(0.05, 0.95), sampler.uniform(0.0, pi),
                                       k % 2 == 0 ? 0.0 : pi);
            row.cfg.mode = kind == 2   ? EncodeMode::branch_1
                           : kind == 3 ? EncodeMode::branch_2
                                       : EncodeMode::forgotten;
        }
        row.verdict = run_case(row.cfg).verdict;
        row.commuting = row.verdict.derivative_commutator_norm <= tol::commuting;
        row.agrees = row.verdict.achievable &&
                     ((!row.verdict.qfim_invertible) == row.commuting);
        rows.push_back(row);
    }
    return rows;
}

std::vector<AlignmentAuditRow> audit_direction_alignment(int pairs, std::uint64_t seed,
                                                         double alpha, double beta, double r,
                                                         AxisConvention conv) {
    InstanceSampler sampler(seed);
    std::vector<AlignmentAuditRow> rows;
    rows.reserve(static_cast<std::size_t>(pairs));
    const MeasurementFamily mf = MeasurementFamily::alpha_theta(beta, conv);

    for (int k = 0; k < pairs; ++k) {
        // Upper bound keeps the 3*x2 locus inside the phi1 range [0, pi].
        const double x2 = sampler.uniform(0.15, 1.0);
        double phi1 = sampler.uniform(0.1, pi - 0.1);
        // Interleave both special loci with generic pairs.
        if (k % 5 == 0) {
            phi1 = 3.0 * x2;  // tangent-relation locus
        } else if (k % 5 == 1) {
            phi1 = x2;  // probe aligned with the measurement axis
        }

        AlignmentAuditRow row;
        row.phi1 = phi1;
        row.x2 = x2;
        row.tangent_condition = std::abs(std::tan(x2) - std::tan(phi1 - 2.0 * x2)) <= 1e-9;

        const QubitState probe(r, phi1, 0.0);
        const EncodedFamily family = EncodedFamily::non_selective(mf, probe);
        const std::array<double, 2> x{alpha, x2};
        const std::vector<Mat2> d = family.derivatives(x);
        row.commutator_norm = commutator(d[0], d[1]).frobenius_norm();
        row.commutator_vanishes = row.commutator_norm <= tol::commuting;
        row.agrees = row.tangent_condition == row.commutator_vanishes;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace povmest
