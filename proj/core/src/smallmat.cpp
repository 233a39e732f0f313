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

#include "povmest/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace povmest {

RealMat RealMat::identity(std::size_t n) {
    RealMat m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

bool RealMat::is_symmetric(double tolerance) const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (std::abs(at(i, j) - at(j, i)) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

double RealMat::max_abs() const {
    double m = 0.0;
    for (double v : a_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

RealMat RealMat::operator+(const RealMat& o) const {
    RealMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] = a_[k] + o.a_[k];
    }
    return r;
}

RealMat RealMat::operator-(const RealMat& o) const {
    RealMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] = a_[k] - o.a_[k];
    }
    return r;
}

RealMat RealMat::operator*(double s) const {
    RealMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] = a_[k] * s;
    }
    return r;
}

SymEigen sym_eigen(const RealMat& m) {
    if (!m.is_symmetric(1e-9 * std::max(1.0, m.max_abs()))) {
        throw std::invalid_argument("sym_eigen: matrix is not symmetric");
    }
    const std::size_t n = m.size();
    RealMat a = m;
    RealMat vec = RealMat::identity(n);

    // Cyclic Jacobi rotations until the off-diagonal mass is negligible.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a.at(p, q) * a.at(p, q);
            }
        }
        if (off <= 1e-30 * std::max(1.0, a.max_abs() * a.max_abs())) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p);
                    const double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k);
                    const double aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vec.at(k, p);
                    const double vkq = vec.at(k, q);
                    vec.at(k, p) = c * vkp - s * vkq;
                    vec.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a.at(i, i) > a.at(j, j); });

    SymEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a.at(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors[k][r] = vec.at(r, order[k]);
        }
    }
    return out;
}

double sym_det(const RealMat& m) {
    const SymEigen e = sym_eigen(m);
    double d = 1.0;
    for (double v : e.values) {
        d *= v;
    }
    return d;
}

double singular_value_ratio(const RealMat& m) {
    const SymEigen e = sym_eigen(m);
    double lo = std::abs(e.values.front());
    double hi = lo;
    for (double v : e.values) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    return hi == 0.0 ? 0.0 : lo / hi;
}

double trace_weighted_inverse(const RealMat& w, const RealMat& m, double floor) {
    if (w.size() != m.size()) {
        throw std::invalid_argument("trace_weighted_inverse: dimension mismatch");
    }
    const SymEigen e = sym_eigen(m);
    const std::size_t n = m.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] <= floor) {
            throw std::domain_error("trace_weighted_inverse: matrix is not positive definite");
        }
        // v_k^T w v_k / lambda_k
        double quad = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                quad += e.vectors[k][i] * w.at(i, j) * e.vectors[k][j];
            }
        }
        total += quad / e.values[k];
    }
    return total;
}

}  // namespace povmest
