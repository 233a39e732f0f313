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

#include "povmest/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace povmest {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

// Probe coordinates (r, phi1, phi2) with clamping into the Bloch domain.
using Point = std::array<double, 3>;

Point clamp_point(Point p) {
    p[0] = std::min(std::max(p[0], 0.0), 1.0);
    p[1] = std::min(std::max(p[1], 0.0), pi);
    p[2] = std::fmod(p[2], 2.0 * pi);
    if (p[2] < 0.0) {
        p[2] += 2.0 * pi;
    }
    return p;
}

struct Evaluator {
    ErrorObjective objective;
    const MeasurementFamily& mf;
    std::span<const double> x;
    const WeightMatrix& w;
    long evaluations = 0;
    bool any_ok = false;
    ErrorStatus first_flag = ErrorStatus::ok;

    double operator()(const Point& raw) {
        const Point p = clamp_point(raw);
        ++evaluations;
        const QubitState probe(p[0], p[1], p[2]);
        const ErrorResult r = objective == ErrorObjective::outcome_remembered
                                  ? or_error(mf, probe, x, w)
                                  : of_error(mf, probe, x, w);
        if (r.ok()) {
            any_ok = true;
        } else if (first_flag == ErrorStatus::ok) {
            first_flag = r.status;
        }
        return r.value_or_infinity();
    }
};

std::vector<double> axis_values(int count, double lo, double hi, bool endpoint) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    if (count <= 1) {
        v.push_back(lo);
        return v;
    }
    const double denom = endpoint ? count - 1 : count;
    for (int k = 0; k < count; ++k) {
        v.push_back(lo + (hi - lo) * static_cast<double>(k) / denom);
    }
    return v;
}

// Proportionally shrink the grid axes until the product fits the budget.
void apply_budget(long budget, int& nr, int& np1, int& np2) {
    if (budget <= 0) {
        return;
    }
    if (budget == 1) {
        nr = np1 = np2 = 1;
        return;
    }
    auto product = [&]() {
        return static_cast<long>(nr) * static_cast<long>(np1) * static_cast<long>(np2);
    };
    while (product() > budget) {
        int* largest = &nr;
        if (*largest < np1) {
            largest = &np1;
        }
        if (*largest < np2) {
            largest = &np2;
        }
        if (*largest <= 1) {
            break;
        }
        --*largest;
    }
}

// Standard Nelder-Mead on the first `dims` coordinates; the remaining
// coordinates stay fixed. Deterministic, bounded by max_iter.
void nelder_mead(Evaluator& eval, Point start, const std::array<double, 3>& steps, int dims,
                 int max_iter, double shrink_tol, Point& best_point, double& best_value) {
    struct Vertex {
        Point p;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.push_back({start, eval(start)});
    for (int d = 0; d < dims; ++d) {
        Point p = start;
        p[static_cast<std::size_t>(d)] += steps[static_cast<std::size_t>(d)];
        simplex.push_back({p, eval(p)});
    }
    const auto note = [&](const Vertex& v) {
        if (v.f < best_value) {
            best_value = v.f;
            best_point = clamp_point(v.p);
        }
    };
    for (const Vertex& v : simplex) {
        note(v);
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        double spread = 0.0;
        for (int d = 0; d < dims; ++d) {
            const std::size_t dd = static_cast<std::size_t>(d);
            double lo = simplex.front().p[dd];
            double hi = lo;
            for (const Vertex& v : simplex) {
                lo = std::min(lo, v.p[dd]);
                hi = std::max(hi, v.p[dd]);
            }
            spread = std::max(spread, hi - lo);
        }
        if (spread < shrink_tol) {
            break;
        }

        Vertex& worst = simplex.back();
        Point centroid = simplex.front().p;  // non-varying coords carried along
        for (int d = 0; d < dims; ++d) {
            const std::size_t dd = static_cast<std::size_t>(d);
            double c = 0.0;
            for (std::size_t k = 0; k + 1 < simplex.size(); ++k) {
                c += simplex[k].p[dd];
            }
            centroid[dd] = c / static_cast<double>(simplex.size() - 1);
        }
        const auto blend = [&](double coeff) {
            Point p = centroid;
            for (int d = 0; d < dims; ++d) {
                const std::size_t dd = static_cast<std::size_t>(d);
                p[dd] = centroid[dd] + coeff * (worst.p[dd] - centroid[dd]);
            }
            return p;
        };

        const Point refl = blend(-1.0);
        const double f_refl = eval(refl);
        note({refl, f_refl});
        if (f_refl < simplex.front().f) {
            const Point expd = blend(-2.0);
            const double f_expd = eval(expd);
            note({expd, f_expd});
            worst = f_expd < f_refl ? Vertex{expd, f_expd} : Vertex{refl, f_refl};
            continue;
        }
        if (f_refl < simplex[simplex.size() - 2].f) {
            worst = {refl, f_refl};
            continue;
        }
        const Point contr = blend(f_refl < worst.f ? -0.5 : 0.5);
        const double f_contr = eval(contr);
        note({contr, f_contr});
        if (f_contr < std::min(worst.f, f_refl)) {
            worst = {contr, f_contr};
            continue;
        }
        // Shrink towards the best vertex.
        for (std::size_t k = 1; k < simplex.size(); ++k) {
            for (int d = 0; d < dims; ++d) {
                const std::size_t dd = static_cast<std::size_t>(d);
                simplex[k].p[dd] =
                    simplex.front().p[dd] + 0.5 * (simplex[k].p[dd] - simplex.front().p[dd]);
            }
            simplex[k].f = eval(simplex[k].p);
            note(simplex[k]);
        }
    }
}

}  // namespace

ProbeOptimum optimize_probe(ErrorObjective objective, const MeasurementFamily& mf,
                            std::span<const double> x, const WeightMatrix& w,
                            const OptimizerConfig& config) {
    int nr = std::max(config.r_points, 1);
    int np1 = std::max(config.phi1_points, 1);
    int np2 = config.reduce_phi2 ? 2 : std::max(config.phi2_points, 1);
    apply_budget(config.budget, nr, np1, np2);

    const std::vector<double> rs = axis_values(nr, 0.0, 1.0, true);
    const std::vector<double> p1s = axis_values(np1, 0.0, pi, true);
    const std::vector<double> p2s = config.reduce_phi2 && np2 >= 2
                                        ? std::vector<double>{0.0, pi}
                                        : axis_values(np2, 0.0, 2.0 * pi, false);

    Evaluator eval{objective, mf, x, w};
    Point best_point{0.0, 0.0, 0.0};
    double best_value = inf;
    for (double r : rs) {
        for (double p1 : p1s) {
            for (double p2 : p2s) {
                const Point p{r, p1, p2};
                const double f = eval(p);
                if (f < best_value) {
                    best_value = f;
                    best_point = p;
                }
            }
        }
    }

    ProbeOptimum out{QubitState::maximally_mixed(), best_value, ErrorStatus::ok, 0};
    if (!eval.any_ok) {
        out.status = eval.first_flag == ErrorStatus::ok ? ErrorStatus::zero_information
                                                        : eval.first_flag;
        out.best_value = inf;
        out.evaluations = eval.evaluations;
        return out;
    }

    const bool single_point = nr * np1 * np2 == 1 || config.budget == 1;
    if (!single_point) {
        const std::array<double, 3> steps{
            rs.size() > 1 ? (rs[1] - rs[0]) / 2 : 0.05,
            p1s.size() > 1 ? (p1s[1] - p1s[0]) / 2 : 0.1,
            p2s.size() > 1 ? (p2s[1] - p2s[0]) / 2 : 0.1,
        };
        const int dims = config.reduce_phi2 ? 2 : 3;
        nelder_mead(eval, best_point, steps, dims, config.refine_max_iter,
                    config.refine_shrink_tol, best_point, best_value);
    }

    out.best_probe = QubitState(best_point[0], best_point[1], best_point[2]);
    out.best_value = best_value;
    out.evaluations = eval.evaluations;
    return out;
}

ProbeOptimum optimize_probe(ErrorObjective objective, const MeasurementFamily& mf,
                            std::span<const double> x, long budget) {
    OptimizerConfig config;
    config.budget = budget;
    return optimize_probe(objective, mf, x, WeightMatrix::identity(mf.dim()), config);
}

}  // namespace povmest
