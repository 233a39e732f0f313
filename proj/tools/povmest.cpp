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

// Command line driver: scenario sweeps with CSV output (figure, sweep),
// structural checks over random instances (check), and point evaluations
// (qfi). Exit status: 0 when the scenario's qualitative claim holds, 2 when
// it is violated, 1 on execution errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "povmest/criteria.hpp"
#include "povmest/sweep.hpp"
#include "povmest/version.hpp"

namespace {

using namespace povmest;

// Config files are flat key=value lines mirroring the long flags ('#' starts
// a comment; flag keys take true/false; multi-value keys are whitespace
// separated). Explicit command line flags take precedence: file keys already
// present on the command line are ignored. Expansion happens before parsing,
// so every subcommand shares the same mechanism.
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot read config file '" + path + "'");
    }
    const auto given = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    std::string line;
    while (std::getline(file, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config") {
            continue;
        }
        const std::string flag = "--" + key;
        if (given(flag)) {
            continue;  // command line wins
        }
        if (value == "true" || value == "false") {
            if (value == "true") {
                args.push_back(flag);
            }
            continue;
        }
        std::istringstream values(value);
        std::string item;
        while (values >> item) {
            args.push_back(flag);
            args.push_back(item);
        }
    }
    return args;
}

struct SweepCli {
    std::string which;  // figure id or scenario name
    std::string config;
    std::vector<double> alphas;
    int grid = 60;
    double margin = -1.0;        // <0: per-scenario default
    double theta_margin = 0.05;
    long budget = 0;
    int refine_iters = 300;
    std::string out;
};

struct CheckCli {
    std::string which;
    std::string config;
    int instances = 0;
    std::uint64_t seed = 20260809;
    std::string out;
};

struct QfiCli {
    std::string config;
    std::string scenario = "alpha-est";
    double alpha = 0.4;
    double beta = 0.1;
    double theta = 0.0;
    std::string probe = "1,1.5707963267948966,0";
    std::string mode = "all";
    bool optimize = false;
    long budget = 0;
};

void add_sweep_options(CLI::App* cmd, SweepCli& cli) {
    cmd->add_option("--alpha", cli.alphas, "alpha values (repeatable)");
    cmd->add_option("--grid", cli.grid, "points along the swept axis")->check(CLI::PositiveNumber);
    cmd->add_option("--margin", cli.margin, "margin from the positivity boundary (ratio units)");
    cmd->add_option("--theta-margin", cli.theta_margin, "margin from the theta-axis endpoints");
    cmd->add_option("--budget", cli.budget, "cap on coarse-grid probe evaluations (0: default grid)");
    cmd->add_option("--refine-iters", cli.refine_iters, "simplex refinement iteration cap");
    cmd->add_option("--out", cli.out, "output CSV path");
    cmd->add_option("--config", cli.config,
                    "key=value config file mirroring the flags (flags take precedence)");
}

FigureConfig make_config(const SweepCli& cli, ScanScenario scenario) {
    FigureConfig cfg;
    if (!cli.alphas.empty()) {
        cfg.alphas = cli.alphas;
    }
    cfg.axis_points = cli.grid;
    if (cli.margin >= 0.0) {
        cfg.ratio_margin = cli.margin;
        if (scenario == ScanScenario::theta_beta_estimation) {
            cfg.theta_margin = cli.margin;
        }
    }
    if (scenario == ScanScenario::theta_beta_estimation && cli.theta_margin >= 0.0) {
        cfg.theta_margin = cli.theta_margin;
    }
    cfg.optimizer.budget = cli.budget;
    cfg.optimizer.refine_max_iter = cli.refine_iters;
    return cfg;
}

int emit_scan(const FigureResult& result, const FigureConfig& cfg, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "povmest: cannot open output path '" << path << "'\n";
        return 1;
    }
    write_scan_csv(file, result, cfg);
    std::cout << (result.claim_holds ? "claim held" : "claim violated") << ": "
              << result.claim_text << "\n"
              << "rows=" << result.scan.rows.size() << " ok=" << result.scan.ok_rows
              << " negative=" << result.scan.negative_rows << " -> " << path << "\n";
    return result.claim_holds ? 0 : 2;
}

int cmd_figure(const SweepCli& cli) {
    FigureId id;
    if (cli.which == "1a") {
        id = FigureId::fig_1a;
    } else if (cli.which == "1b") {
        id = FigureId::fig_1b;
    } else if (cli.which == "2") {
        id = FigureId::fig_2;
    } else {
        std::cerr << "povmest: unknown figure '" << cli.which << "' (expected 1a, 1b or 2)\n";
        return 1;
    }
    const FigureConfig cfg = make_config(cli, figure_scenario(id));
    const FigureResult result = run_figure(id, cfg);
    const std::string path = cli.out.empty() ? "figure_" + cli.which + ".csv" : cli.out;
    return emit_scan(result, cfg, path);
}

int cmd_sweep(const SweepCli& cli) {
    ScanScenario scenario;
    if (cli.which == "beta-est") {
        scenario = ScanScenario::beta_estimation;
    } else if (cli.which == "alpha-est") {
        scenario = ScanScenario::alpha_estimation;
    } else if (cli.which == "theta-beta-est") {
        scenario = ScanScenario::theta_beta_estimation;
    } else {
        std::cerr << "povmest: unknown scenario '" << cli.which
                  << "' (expected beta-est, alpha-est or theta-beta-est)\n";
        return 1;
    }
    const FigureConfig cfg = make_config(cli, scenario);
    const FigureResult result = run_sweep(scenario, cfg);
    const std::string path = cli.out.empty() ? "sweep_" + cli.which + ".csv" : cli.out;
    return emit_scan(result, cfg, path);
}

int cmd_check(const CheckCli& cli) {
    CheckKind kind;
    if (cli.which == "I") {
        kind = CheckKind::case_I;
    } else if (cli.which == "II") {
        kind = CheckKind::case_II;
    } else if (cli.which == "III") {
        kind = CheckKind::case_III;
    } else if (cli.which == "IV") {
        kind = CheckKind::case_IV;
    } else if (cli.which == "theorem2-audit") {
        kind = CheckKind::invertibility_audit;
    } else {
        std::cerr << "povmest: unknown check '" << cli.which
                  << "' (expected I, II, III, IV or theorem2-audit)\n";
        return 1;
    }
    CheckConfig cfg;
    cfg.instances = cli.instances;
    cfg.seed = cli.seed;
    const CheckResult result = run_check(kind, cfg);
    const std::string path = cli.out.empty() ? "check_" + cli.which + ".csv" : cli.out;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "povmest: cannot open output path '" << path << "'\n";
        return 1;
    }
    write_check_csv(file, result, cfg);
    std::cout << (result.claim_holds ? "claim held" : "claim violated") << ": "
              << result.summary << " -> " << path << "\n";
    return result.claim_holds ? 0 : 2;
}

QubitState parse_probe(const std::string& text) {
    std::istringstream in(text);
    double r = 0, phi1 = 0, phi2 = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> r >> c1 >> phi1 >> c2 >> phi2) || c1 != ',' || c2 != ',') {
        throw std::invalid_argument("probe must be 'r,phi1,phi2'");
    }
    return {r, phi1, phi2};
}

void print_value(const std::string& name, double v) {
    std::cout << name << " = " << format_double(v) << "\n";
}

int cmd_qfi(const QfiCli& cli) {
    const QubitState probe = parse_probe(cli.probe);
    const WeightMatrix w1 = WeightMatrix::identity(1);

    const bool is_case = cli.scenario.rfind("case-", 0) == 0;
    if (!is_case) {
        MeasurementFamily mf = [&]() {
            if (cli.scenario == "alpha-est") {
                return MeasurementFamily::alpha_parameter(cli.beta, cli.theta);
            }
            if (cli.scenario == "beta-est") {
                return MeasurementFamily::beta_parameter(cli.alpha, cli.theta);
            }
            if (cli.scenario == "theta-est") {
                return MeasurementFamily::direction_parameter(cli.alpha, cli.beta);
            }
            if (cli.scenario == "theta-beta-est") {
                return MeasurementFamily::direction_beta_cosine(cli.alpha);
            }
            throw std::invalid_argument("unknown scenario '" + cli.scenario + "'");
        }();
        const double x1 = cli.scenario == "alpha-est"  ? cli.alpha
                          : cli.scenario == "beta-est" ? cli.beta
                                                       : cli.theta;
        const std::array<double, 1> x{x1};
        std::cout << "scenario = " << cli.scenario << "\n";
        print_value("x1", x1);

        if (cli.optimize) {
            OptimizerConfig opt;
            opt.budget = cli.budget;
            if (cli.mode == "or" || cli.mode == "all") {
                const ProbeOptimum best =
                    optimize_probe(ErrorObjective::outcome_remembered, mf, x, w1, opt);
                print_value("or_error_optimal", best.best_value);
                std::cout << "or_probe = " << format_double(best.best_probe.r()) << ","
                          << format_double(best.best_probe.phi1()) << ","
                          << format_double(best.best_probe.phi2()) << "\n";
            }
            if (cli.mode == "of" || cli.mode == "all") {
                const ProbeOptimum best =
                    optimize_probe(ErrorObjective::outcome_forgotten, mf, x, w1, opt);
                print_value("of_error_optimal", best.best_value);
                std::cout << "of_probe = " << format_double(best.best_probe.r()) << ","
                          << format_double(best.best_probe.phi1()) << ","
                          << format_double(best.best_probe.phi2()) << "\n";
            }
            return 0;
        }

        if (cli.mode == "branch1" || cli.mode == "branch2" || cli.mode == "all") {
            for (int b = 1; b <= 2; ++b) {
                if (cli.mode != "all" && b != (cli.mode == "branch1" ? 1 : 2)) {
                    continue;
                }
                const EncodedFamily fam = EncodedFamily::selective(mf, probe, b);
                const std::string tag = "branch" + std::to_string(b);
                const double q = fam.probability(x);
                print_value(tag + "_probability", q);
                if (q >= 1e-14) {
                    print_value(tag + "_qfi", qfi(fam.state(x), fam.derivative(x, 0)));
                }
            }
        }
        if (cli.mode == "of" || cli.mode == "all") {
            const EncodedFamily fam = EncodedFamily::non_selective(mf, probe);
            print_value("of_qfi", qfi(fam.state(x), fam.derivative(x, 0)));
            const ErrorResult r = of_error(mf, probe, x, w1);
            if (r.ok()) {
                print_value("of_error", r.value);
            } else {
                std::cout << "of_error = " << to_string(r.status) << "\n";
            }
        }
        if (cli.mode == "or" || cli.mode == "all") {
            const ErrorResult r = or_error(mf, probe, x, w1);
            if (r.ok()) {
                print_value("or_error", r.value);
            } else {
                std::cout << "or_error = " << to_string(r.status) << "\n";
            }
        }
        return 0;
    }

    // Multi-parameter cases: report the Fisher matrix and both criteria.
    if (cli.optimize) {
        throw std::invalid_argument("--optimize applies to single-parameter scenarios only");
    }
    CaseConfig cfg{CaseId::coefficients, cli.alpha, cli.beta, cli.theta, probe,
                   EncodeMode::forgotten, AxisConvention::sin_cos};
    if (cli.scenario == "case-I") {
        cfg.id = CaseId::coefficients;
    } else if (cli.scenario == "case-II") {
        cfg.id = CaseId::alpha_direction;
    } else if (cli.scenario == "case-III") {
        cfg.id = CaseId::beta_direction;
    } else if (cli.scenario == "case-IV") {
        cfg.id = CaseId::all_three;
    } else {
        throw std::invalid_argument("unknown scenario '" + cli.scenario + "'");
    }
    if (cli.mode == "branch1") {
        cfg.mode = EncodeMode::branch_1;
    } else if (cli.mode == "branch2") {
        cfg.mode = EncodeMode::branch_2;
    }
    const CaseReport report = run_case(cfg);
    std::cout << "scenario = " << cli.scenario << "\n";
    const std::size_t m = report.fisher.qfim.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            print_value("qfim_" + std::to_string(i) + std::to_string(j),
                        report.fisher.qfim.at(i, j));
        }
    }
    print_value("qfim_det", report.fisher.qfim_det);
    print_value("sv_ratio", report.fisher.sv_ratio);
    print_value("max_abs_uhlmann", report.verdict.max_abs_uhlmann);
    print_value("commutator_norm", report.verdict.derivative_commutator_norm);
    std::cout << "achievable = " << (report.verdict.achievable ? "yes" : "no") << "\n";
    std::cout << "invertible = " << (report.verdict.qfim_invertible ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-encoded parameter estimation toolkit"};
    app.set_version_flag("--version", povmest::version_string);
    app.require_subcommand(1);

    SweepCli figure_cli, sweep_cli;
    CheckCli check_cli;
    QfiCli qfi_cli;

    CLI::App* figure = app.add_subcommand("figure", "sweep a preset scenario and verify its claim");
    figure->add_option("which", figure_cli.which, "1a, 1b or 2")->required();
    add_sweep_options(figure, figure_cli);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep a scenario grid to CSV");
    sweep->add_option("--scenario", sweep_cli.which, "beta-est, alpha-est or theta-beta-est")
        ->required();
    add_sweep_options(sweep, sweep_cli);

    CLI::App* check = app.add_subcommand("check", "run structural checks over random instances");
    check->add_option("which", check_cli.which, "I, II, III, IV or theorem2-audit")->required();
    check->add_option("--instances", check_cli.instances, "instance count (0: per-check default)");
    check->add_option("--seed", check_cli.seed, "random instance seed");
    check->add_option("--out", check_cli.out, "output CSV path");
    check->add_option("--config", check_cli.config,
                      "key=value config file mirroring the flags (flags take precedence)");

    CLI::App* qfi_cmd = app.add_subcommand("qfi", "evaluate information and errors at one point");
    qfi_cmd->add_option("--scenario", qfi_cli.scenario,
                        "alpha-est, beta-est, theta-est, theta-beta-est, case-I..case-IV");
    qfi_cmd->add_option("--alpha", qfi_cli.alpha, "alpha value");
    qfi_cmd->add_option("--beta", qfi_cli.beta, "beta value");
    qfi_cmd->add_option("--theta", qfi_cli.theta, "theta value");
    qfi_cmd->add_option("--probe", qfi_cli.probe, "probe as r,phi1,phi2");
    qfi_cmd->add_option("--mode", qfi_cli.mode, "or, of, branch1, branch2 or all");
    qfi_cmd->add_flag("--optimize", qfi_cli.optimize, "optimize the probe first");
    qfi_cmd->add_option("--budget", qfi_cli.budget, "optimizer grid budget");
    qfi_cmd->add_option("--config", qfi_cli.config,
                        "key=value config file mirroring the flags (flags take precedence)");

    std::vector<std::string> args;
    try {
        args = expand_config_args(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "povmest: " << e.what() << "\n";
        return 1;
    }
    std::reverse(args.begin(), args.end());  // CLI11 vector parse order
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (figure->parsed()) {
            return cmd_figure(figure_cli);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_cli);
        }
        if (check->parsed()) {
            return cmd_check(check_cli);
        }
        if (qfi_cmd->parsed()) {
            return cmd_qfi(qfi_cli);
        }
    } catch (const std::exception& e) {
        std::cerr << "povmest: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
