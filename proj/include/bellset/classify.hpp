// Copyright 2026 The bellset Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bellset/config.hpp"
#include "bellset/optimizer.hpp"

namespace bellset {

/// Optimized values of ineq1..ineq6 for one three-qubit state.
struct ViolationProfile {
    std::array<double, 6> values{};
};

enum class Label { separable, biseparable, genuine };

std::string_view to_string(Label label);

struct Classification {
    Label label = Label::genuine;
    std::optional<unsigned> lone; // set for biseparable only
    ViolationProfile profile;
    double eq_tol = kTolerances.equality;
    double viol_tol = kTolerances.violation;
};

/// Lone qubit whose state factors out when exactly the inequalities at
/// `first` and `second` (0-based alias indices) are violated: the pairs
/// {ineq1, ineq3}, {ineq2, ineq6}, {ineq4, ineq5} are the members whose
/// single-measurement party is qubit 1, 2 and 3 respectively.
std::optional<unsigned> lone_qubit_for_pair(std::size_t first, std::size_t second);

/// No value above 2 + viol_tol: separable. Exactly two above, equal within
/// eq_tol and forming a lone-qubit pair: biseparable. Anything else: genuine.
/// Throws AmbiguousProfile when exactly two equal violations fall outside
/// the lone-qubit pairs, and ConstraintViolation for values outside
/// [0, 2 sqrt 2 + slack].
Classification classify(const ViolationProfile& profile, double eq_tol = kTolerances.equality,
                        double viol_tol = kTolerances.violation);

struct ProfileRun {
    ViolationProfile profile;
    std::array<ViolationResult, 6> results;
};

/// Runs seesaw_maximize for each of ineq1..ineq6.
ProfileRun profile_state(const StateVector& s, const OptimizerConfig& cfg = {});

} // namespace bellset
