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

/// Dense real m x m matrices for the Fisher-matrix layer (m is the number of
/// estimated parameters, 1 to 3 in practice). Symmetric eigenproblems are
/// solved with cyclic Jacobi sweeps; everything is deterministic.

#pragma once

#include <cstddef>
#include <vector>

namespace povmest {

class RealMat {
  public:
    RealMat() = default;
    explicit RealMat(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static RealMat identity(std::size_t n);

    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric(double tolerance = 1e-12) const;
    double max_abs() const;

    RealMat operator+(const RealMat& o) const;
    RealMat operator-(const RealMat& o) const;
    RealMat operator*(double s) const;

  private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Eigen decomposition of a symmetric matrix; values sorted descending,
/// vectors[k] is the unit eigenvector of values[k].
struct SymEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

SymEigen sym_eigen(const RealMat& m);

double sym_det(const RealMat& m);

/// smallest |eigenvalue| / largest |eigenvalue|; 0 for the zero matrix.
double singular_value_ratio(const RealMat& m);

/// tr(w m^{-1}) for symmetric positive-definite m. Throws std::domain_error
/// when m has an eigenvalue at or below `floor`.
double trace_weighted_inverse(const RealMat& w, const RealMat& m, double floor = 0.0);

}  // namespace povmest
