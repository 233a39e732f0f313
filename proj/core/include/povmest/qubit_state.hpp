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

#pragma once

#include "povmest/mat2.hpp"

namespace povmest {

/// Qubit density matrix in Bloch polar form:
///   rho = (I + r * rhat . sigma) / 2,
///   rhat = (sin phi1 cos phi2, sin phi1 sin phi2, cos phi1),
/// with r in [0, 1], phi1 in [0, pi] and phi2 normalized into [0, 2 pi).
class QubitState {
  public:
    QubitState(double r, double phi1, double phi2);

    double r() const { return r_; }
    double phi1() const { return phi1_; }
    double phi2() const { return phi2_; }

    Vec3 direction() const;
    Vec3 bloch() const { return direction() * r_; }
    Mat2 matrix() const { return bloch_to_matrix(bloch()); }

    static QubitState from_bloch(const Vec3& v);
    static QubitState maximally_mixed() { return {0.0, 0.0, 0.0}; }
    static QubitState basis0() { return {1.0, 0.0, 0.0}; }
    /// |+> = (|0> + |1>)/sqrt(2).
    static QubitState plus();

  private:
    double r_, phi1_, phi2_;
};

}  // namespace povmest
