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

#include "povmest/qubit_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace povmest {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
// Slack for clamping angle/purity values that drift past their range by
// rounding (optimizer boundary iterates in particular).
constexpr double range_slack = 1e-9;
}  // namespace

QubitState::QubitState(double r, double phi1, double phi2) : r_(r), phi1_(phi1), phi2_(phi2) {
    if (!std::isfinite(r) || !std::isfinite(phi1) || !std::isfinite(phi2)) {
        throw std::invalid_argument("QubitState: non-finite parameter");
    }
    if (r < -range_slack || r > 1.0 + range_slack) {
        throw std::invalid_argument("QubitState: purity r outside [0, 1]");
    }
    if (phi1 < -range_slack || phi1 > std::numbers::pi + range_slack) {
        throw std::invalid_argument("QubitState: phi1 outside [0, pi]");
    }
    r_ = std::min(std::max(r_, 0.0), 1.0);
    phi1_ = std::min(std::max(phi1_, 0.0), std::numbers::pi);
    phi2_ = std::fmod(phi2_, two_pi);
    if (phi2_ < 0.0) {
        phi2_ += two_pi;
    }
}

Vec3 QubitState::direction() const {
    return {std::sin(phi1_) * std::cos(phi2_), std::sin(phi1_) * std::sin(phi2_),
            std::cos(phi1_)};
}

QubitState QubitState::from_bloch(const Vec3& v) {
    const double r = v.norm();
    if (r > 1.0 + 1e-12) {
        throw std::invalid_argument("QubitState::from_bloch: vector leaves the unit ball");
    }
    if (r == 0.0) {
        return maximally_mixed();
    }
    const double phi1 = std::acos(std::min(std::max(v.z / r, -1.0), 1.0));
    const double phi2 = (v.x == 0.0 && v.y == 0.0) ? 0.0 : std::atan2(v.y, v.x);
    return {std::min(r, 1.0), phi1, phi2};
}

QubitState QubitState::plus() { return {1.0, std::numbers::pi / 2, 0.0}; }

}  // namespace povmest
