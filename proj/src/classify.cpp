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
#include "bellset/classify.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bellset/errors.hpp"

namespace bellset {

std::string_view to_string(Label label) {
    switch (label) {
    case Label::separable: return "separable";
    case Label::biseparable: return "biseparable";
    case Label::genuine: return "genuine";
    }
    return "unknown";
}

std::optional<unsigned> lone_qubit_for_pair(std::size_t first, std::size_t second) {
    if (first > second) std::swap(first, second);
    struct Entry {
        std::size_t a, b;
        unsigned lone;
    };
    static constexpr Entry table[] = {{0, 2, 1}, {1, 5, 2}, {3, 4, 3}};
    for (const auto& e : table)
        if (e.a == first && e.b == second) return e.lone;
    return std::nullopt;
}

Classification classify(const ViolationProfile& profile, double eq_tol, double viol_tol) {
    const double ceiling = 2.0 * std::numbers::sqrt2 + kTolerances.quantum_bound;
    for (double v : profile.values) {
        if (!(v >= 0.0 && v <= ceiling)) {
            throw Error(ErrorCode::ConstraintViolation, "profile value " + std::to_string(v) + " outside [0, 2 sqrt 2]");
        }
    }
    Classification out;
    out.profile = profile;
    out.eq_tol = eq_tol;
    out.viol_tol = viol_tol;

    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < profile.values.size(); ++i)
        if (profile.values[i] > 2.0 + viol_tol) violated.push_back(i);

    if (violated.empty()) {
        out.label = Label::separable;
        return out;
    }
    if (violated.size() == 2) {
        const double gap = std::abs(profile.values[violated[0]] - profile.values[violated[1]]);
        if (gap <= eq_tol) {
            const auto lone = lone_qubit_for_pair(violated[0], violated[1]);
            if (!lone) {
                throw Error(ErrorCode::AmbiguousProfile, "two equal violations (ineq" + std::to_string(violated[0] + 1) +
                                                             ", ineq" + std::to_string(violated[1] + 1) +
                                                             ") outside the lone-qubit pairs");
            }
            out.label = Label::biseparable;
            out.lone = lone;
            return out;
        }
    }
    out.label = Label::genuine;
    return out;
}

ProfileRun profile_state(const StateVector& s, const OptimizerConfig& cfg) {
    ProfileRun run;
    const auto& specs = three_qubit_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        run.results[i] = seesaw_maximize(s, specs[i], cfg);
        run.profile.values[i] = run.results[i].value;
    }
    return run;
}

} // namespace bellset
