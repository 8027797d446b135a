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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellset/classify.hpp"
#include "bellset/errors.hpp"
#include "bellset/rng.hpp"
#include "bellset/states.hpp"

using namespace bellset;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::ParseError;
}

ViolationProfile with(std::initializer_list<std::pair<std::size_t, double>> entries) {
    ViolationProfile p;
    p.values.fill(2.0);
    for (const auto& [i, v] : entries) p.values[i] = v;
    return p;
}

std::size_t index_of(unsigned single, unsigned pm) {
    const auto& six = three_qubit_specs();
    for (std::size_t i = 0; i < six.size(); ++i)
        if (six[i].single_party == single && six[i].pm_party == pm) return i;
    FAIL("no such member");
    return 0;
}

} // namespace

TEST_CASE("labels from synthetic profiles") {
    CHECK(classify(with({})).label == Label::separable);
    const auto b = classify(with({{0, 2.5}, {2, 2.5 + 1e-7}}));
    CHECK(b.label == Label::biseparable);
    CHECK(b.lone == 1u);
    CHECK(classify(with({{1, 2.6}, {5, 2.6}})).lone == 2u);
    CHECK(classify(with({{3, 2.7}, {4, 2.7}})).lone == 3u);
    CHECK(classify(with({{0, 2.5}, {2, 2.6}})).label == Label::genuine);
    CHECK(classify(with({{0, 2.5}})).label == Label::genuine);
    CHECK(classify(with({{0, 2.5}, {1, 2.5}, {2, 2.5}})).label == Label::genuine);
    CHECK_FALSE(classify(with({{0, 2.5}, {1, 2.6}})).lone.has_value());
    CHECK(code_of([] { classify(with({{0, 2.5}, {1, 2.5}})); }) == ErrorCode::AmbiguousProfile);
    CHECK(code_of([] { classify(with({{0, 3.0}})); }) == ErrorCode::ConstraintViolation);
    CHECK(code_of([] { classify(with({{0, std::nan("")}})); }) == ErrorCode::ConstraintViolation);
    // Values within the violation tolerance of 2 do not count.
    CHECK(classify(with({{0, 2.0 + 5e-8}})).label == Label::separable);
    CHECK(to_string(Label::biseparable) == "biseparable");
}

TEST_CASE("lone-qubit pairs agree with optimized biseparable profiles") {
    // Which two members a biseparable state violates, found by optimization.
    for (unsigned lone = 1; lone <= 3; ++lone) {
        const auto run = profile_state(biseparable({lone}, 0.6));
        std::vector<std::size_t> violated;
        for (std::size_t i = 0; i < 6; ++i)
            if (run.profile.values[i] > 2.0 + 1e-7) violated.push_back(i);
        REQUIRE(violated.size() == 2);
        CHECK(lone_qubit_for_pair(violated[0], violated[1]) == lone);
        CHECK(lone_qubit_for_pair(violated[1], violated[0]) == lone);
        const double expected = 2.0 * std::sqrt(1.0 + 4 * 0.36 * 0.64);
        CHECK(run.profile.values[violated[0]] == doctest::Approx(expected).epsilon(1e-6));
    }
    CHECK_FALSE(lone_qubit_for_pair(0, 1).has_value());
}

TEST_CASE("reference states") {
    CHECK(classify(profile_state(ggz(3, std::sqrt(0.5))).profile).label == Label::genuine);
    CHECK(classify(profile_state(ggz(3, 1.0)).profile).label == Label::separable);
    CHECK(classify(profile_state(StateVector::basis(3, 5)).profile).label == Label::separable);
    const auto c = classify(profile_state(biseparable({2}, std::sqrt(0.5))).profile);
    CHECK(c.label == Label::biseparable);
    CHECK(c.lone == 2u);
}

TEST_CASE("profiles are covariant under qubit permutations") {
    const unsigned perms[][3] = {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    Rng rng(17);
    std::vector<cplx> a(8);
    for (auto& x : a) x = {rng.normal(), rng.normal()};
    const auto s = StateVector::normalized(3, a);
    const auto base = profile_state(s).profile;
    for (const auto& perm : perms) {
        const auto moved = profile_state(permute_qubits(s, perm)).profile;
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& spec = three_qubit_specs()[i];
            const std::size_t j = index_of(perm[spec.single_party - 1], perm[spec.pm_party - 1]);
            CHECK(moved.values[j] == doctest::Approx(base.values[i]).epsilon(1e-6));
        }
    }
    for (const auto& perm : perms) {
        const auto c = classify(profile_state(permute_qubits(biseparable({1}, 0.6), perm)).profile);
        CHECK(c.label == Label::biseparable);
        CHECK(c.lone == perm[0]);
    }
}

TEST_CASE("labels are invariant under local unitaries") {
    Rng rng(23);
    const StateVector inputs[] = {ggz(3, 0.6), biseparable({3}, 0.7), StateVector::basis(3, 0),
                                  canonical_state(sample_canonical(5, ZeroMask{}))};
    for (const auto& s : inputs) {
        auto r = s;
        for (unsigned q = 1; q <= 3; ++q) r = apply_local(r, q, rng.unitary());
        const auto a = classify(profile_state(s).profile), b = classify(profile_state(r).profile);
        CHECK(a.label == b.label);
        CHECK(a.lone == b.lone);
    }
}
