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

#include <benchmark/benchmark.h>

#include <array>

#include "povmest/criteria.hpp"
#include "povmest/errors.hpp"
#include "povmest/fisher.hpp"
#include "povmest/optimize.hpp"

namespace {

using namespace povmest;

void bm_eig_hermitian(benchmark::State& state) {
    const Mat2 m = QubitState(0.8, 1.1, 0.7).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(m));
    }
}
BENCHMARK(bm_eig_hermitian);

void bm_encode_nonselective(benchmark::State& state) {
    const TwoOutcomePovm povm(0.4, 0.1, {0, 0, 1});
    const Mat2 probe = QubitState(0.8, 1.1, 0.7).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_nonselective(povm, probe));
    }
}
BENCHMARK(bm_encode_nonselective);

void bm_qfim_two_parameter(benchmark::State& state) {
    const MeasurementFamily mf = MeasurementFamily::alpha_theta(0.12);
    const EncodedFamily fam = EncodedFamily::non_selective(mf, QubitState(0.6, 1.1, 0.0));
    const std::array<double, 2> x{0.4, 0.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfim(fam, x));
    }
}
BENCHMARK(bm_qfim_two_parameter);

void bm_or_error(benchmark::State& state) {
    const MeasurementFamily mf = MeasurementFamily::beta_parameter(0.4, 0.0);
    const QubitState probe = QubitState::plus();
    const std::array<double, 1> x{0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(or_error(mf, probe, x));
    }
}
BENCHMARK(bm_or_error);

void bm_optimize_probe(benchmark::State& state) {
    const MeasurementFamily mf = MeasurementFamily::beta_parameter(0.4, 0.0);
    const std::array<double, 1> x{0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_probe(ErrorObjective::outcome_forgotten, mf, x, 0));
    }
}
BENCHMARK(bm_optimize_probe);

void bm_scan_row(benchmark::State& state) {
    ScanGrid grid;
    grid.alphas = {0.4};
    grid.axis_points = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(error_gap_scan(ScanScenario::beta_estimation, grid));
    }
}
BENCHMARK(bm_scan_row);

}  // namespace

BENCHMARK_MAIN();
