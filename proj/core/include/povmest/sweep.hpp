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

/// Scenario presets behind the command line: figure sweeps with CSV output,
/// structural-check drivers, and the qualitative claims each one verifies.
/// All output is deterministic: the manifest echoes the configuration and the
/// toolkit version, never timestamps.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "povmest/criteria.hpp"

namespace povmest {

enum class FigureId { fig_1a, fig_1b, fig_2 };

struct FigureConfig {
    std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5};
    int axis_points = 60;
    double ratio_margin = 5e-3 + 1e-4;  ///< fixed margin plus 1e-4 of the unit range
    double theta_margin = 0.05;
    OptimizerConfig optimizer{};
    AxisConvention convention = AxisConvention::sin_cos;
};

struct FigureResult {
    FigureId figure{};
    bool is_figure = false;  ///< produced by run_figure rather than run_sweep
    ScanScenario scenario{};
    ScanSummary scan;
    bool claim_holds = false;
    std::string claim_text;
};

ScanScenario figure_scenario(FigureId id);
FigureResult run_figure(FigureId id, const FigureConfig& cfg);

/// Plain scenario sweep (same engine as the figures, same claim logic).
FigureResult run_sweep(ScanScenario scenario, const FigureConfig& cfg);

/// One CSV per scan: manifest comment rows, a header naming every column
/// (both beta/alpha and alpha/beta ratio forms included), one row per grid
/// point. Numbers are emitted with 17 significant digits.
void write_scan_csv(std::ostream& os, const FigureResult& result, const FigureConfig& cfg);

enum class CheckKind {
    case_I,
    case_II,
    case_III,
    case_IV,
    invertibility_audit,  ///< "theorem2-audit" on the command line
};

struct CheckConfig {
    int instances = 0;  ///< 0: per-kind default (100 / 50 / 50 / 100 / 500)
    std::uint64_t seed = 20260809;
    AxisConvention convention = AxisConvention::sin_cos;
};

struct CheckResult {
    CheckKind kind{};
    int passed = 0;
    int total = 0;
    bool claim_holds = false;
    std::string summary;
    std::vector<std::string> csv_rows;  ///< per-instance evidence
    std::string csv_header;
};

CheckResult run_check(CheckKind kind, const CheckConfig& cfg);
void write_check_csv(std::ostream& os, const CheckResult& result, const CheckConfig& cfg);

/// 17-significant-digit, locale-independent number formatting ("nan"/"inf"
/// spelled out) used for all CSV and report output.
std::string format_double(double v);

}  // namespace povmest
