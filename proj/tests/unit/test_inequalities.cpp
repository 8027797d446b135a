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
#include <set>

#include "bellset/errors.hpp"
#include "bellset/inequalities.hpp"
#include "bellset/rng.hpp"
#include "oracles.hpp"

using namespace bellset;
using oracle::M2;

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

M2 op(const ObservableAngles& a) { return oracle::angle_op(a.theta, a.phi); }

oracle::Dense term(double sign, const M2& a, const M2& b, const M2& c) {
    auto d = oracle::kron({a, b, c});
    for (auto& x : d.a) x *= sign;
    return d;
}

oracle::Dense sum(std::initializer_list<oracle::Dense> parts) {
    oracle::Dense out(8);
    for (const auto& p : parts) out = oracle::add(out, p);
    return out;
}

// The six three-qubit operators written out by hand, term by term.
oracle::Dense hand_expanded(std::size_t which, const MeasurementSettings& ms) {
    const M2 I = oracle::id2();
    auto obs = [&](unsigned party, unsigned slot) { return op(ms.per_party[party][slot]); };
    switch (which) {
    case 0: { // A1 B1 (C1 + C2) + B2 (C1 - C2)
        const M2 A1 = obs(0, 0), B1 = obs(1, 0), B2 = obs(1, 1), C1 = obs(2, 0), C2 = obs(2, 1);
        return sum({term(1, A1, B1, C1), term(1, A1, B1, C2), term(1, I, B2, C1), term(-1, I, B2, C2)});
    }
    case 1: { // A1 B1 (C1 + C2) + A2 (C1 - C2)
        const M2 A1 = obs(0, 0), A2 = obs(0, 1), B1 = obs(1, 0), C1 = obs(2, 0), C2 = obs(2, 1);
        return sum({term(1, A1, B1, C1), term(1, A1, B1, C2), term(1, A2, I, C1), term(-1, A2, I, C2)});
    }
    case 2: { // (B1 + B2) C1 + A1 (B1 - B2) C2
        const M2 A1 = obs(0, 0), B1 = obs(1, 0), B2 = obs(1, 1), C1 = obs(2, 0), C2 = obs(2, 1);
        return sum({term(1, I, B1, C1), term(1, I, B2, C1), term(1, A1, B1, C2), term(-1, A1, B2, C2)});
    }
    case 3: { // A1 (B1 + B2) + A2 (B1 - B2) C1
        const M2 A1 = obs(0, 0), A2 = obs(0, 1), B1 = obs(1, 0), B2 = obs(1, 1), C1 = obs(2, 0);
        return sum({term(1, A1, B1, I), term(1, A1, B2, I), term(1, A2, B1, C1), term(-1, A2, B2, C1)});
    }
    case 4: { // (A1 + A2) B1 + (A1 - A2) B2 C1
        const M2 A1 = obs(0, 0), A2 = obs(0, 1), B1 = obs(1, 0), B2 = obs(1, 1), C1 = obs(2, 0);
        return sum({term(1, A1, B1, I), term(1, A2, B1, I), term(1, A1, B2, C1), term(-1, A2, B2, C1)});
    }
    default: { // (A1 + A2) C1 + (A1 - A2) B1 C2
        const M2 A1 = obs(0, 0), A2 = obs(0, 1), B1 = obs(1, 0), C1 = obs(2, 0), C2 = obs(2, 1);
        return sum({term(1, A1, I, C1), term(1, A2, I, C1), term(1, A1, B1, C2), term(-1, A2, B1, C2)});
    }
    }
}

double max_diff(const ComplexMatrix& m, const oracle::Dense& d) {
    return m.max_abs_diff(ComplexMatrix(d.dim, d.a));
}

} // namespace

TEST_CASE("the six three-qubit members and their labels") {
    const auto& six = three_qubit_specs();
    const unsigned sp[6][2] = {{1, 3}, {2, 3}, {1, 2}, {3, 2}, {3, 1}, {2, 1}};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(six[i].single_party == sp[i][0]);
        CHECK(six[i].pm_party == sp[i][1]);
        CHECK(six[i].alias() == "ineq" + std::to_string(i + 1));
        CHECK(InequalitySpec::parse(six[i].alias()) == six[i]);
        CHECK(InequalitySpec::parse(six[i].id()) == six[i]);
        CHECK(six[i].observable_count() == 5);
    }
    CHECK(InequalitySpec::parse("even:n4:p2") == InequalitySpec::even(4, 2));
    CHECK(code_of([] { InequalitySpec::parse("ineq7"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { InequalitySpec::parse("odd:n3:s3:p3"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { InequalitySpec::odd(3, 2, 2); }) == ErrorCode::InvalidSpec);
    CHECK(code_of([] { InequalitySpec::even(4, 5); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("family sizes") {
    for (unsigned n = 2; n <= 9; ++n) {
        const auto specs = enumerate_specs(n);
        CHECK(specs.size() == (n % 2 == 1 ? n * (n - 1) : n));
        std::set<std::string> ids;
        for (const auto& s : specs) {
            CHECK_NOTHROW(s.validate());
            CHECK(s.n == n);
            ids.insert(s.id());
            CHECK(s.observable_count() == (n % 2 == 1 ? 2 * n - 1 : 2 * n));
        }
        CHECK(ids.size() == specs.size());
    }
    CHECK(code_of([] { enumerate_specs(1); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("term expansion has the plus/minus structure") {
    for (unsigned n = 2; n <= 6; ++n) {
        for (const auto& spec : enumerate_specs(n)) {
            const auto terms = expand_terms(spec);
            REQUIRE(terms.size() == 4);
            CHECK(terms[0].sign == 1.0);
            CHECK(terms[1].sign == 1.0);
            CHECK(terms[2].sign == 1.0);
            CHECK(terms[3].sign == -1.0);
            // Every slot appears somewhere; the pm party appears in every term.
            std::set<std::pair<unsigned, unsigned>> seen;
            for (const auto& t : terms) {
                bool has_pm = false;
                for (const auto& f : t.factors) {
                    seen.insert({f.party, f.slot});
                    has_pm |= f.party == spec.pm_party;
                }
                CHECK(has_pm);
            }
            CHECK(seen.size() == spec.observable_count());
        }
    }
}

TEST_CASE("built operators equal the hand-expanded forms") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& spec = three_qubit_specs()[i];
            const auto ms = random_settings(spec, rng);
            const auto b = build_operator(spec, ms);
            CHECK(b.is_hermitian());
            CHECK(max_diff(b, hand_expanded(i, ms)) < 1e-13);
        }
    }
}

TEST_CASE("arity is checked") {
    const auto& spec = three_qubit_specs()[0];
    Rng rng(1);
    auto ms = random_settings(spec, rng);
    CHECK_NOTHROW(check_arity(spec, ms));
    ms.per_party[0].push_back({0.1, 0.1});
    CHECK(code_of([&] { build_operator(spec, ms); }) == ErrorCode::ArityMismatch);
    ms.per_party.pop_back();
    CHECK(code_of([&] { check_arity(spec, ms); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("deterministic outcomes never exceed the local bound") {
    // Observables +-I reduce every member to a number; the best is exactly 2.
    for (unsigned n = 2; n <= 5; ++n) {
        for (const auto& spec : enumerate_specs(n)) {
            const unsigned m = spec.observable_count();
            double best = -1e9;
            for (unsigned mask = 0; mask < (1U << m); ++mask) {
                std::vector<std::vector<Mat2>> obs(n);
                unsigned bit = 0;
                for (unsigned p = 1; p <= n; ++p)
                    for (unsigned k = 0; k < spec.settings_for(p); ++k) {
                        const double v = ((mask >> bit++) & 1) ? -1.0 : 1.0;
                        obs[p - 1].push_back({v, 0.0, 0.0, v});
                    }
                best = std::max(best, build_operator(spec, obs)(0, 0).real());
            }
            CHECK(best == classical_bound(spec));
        }
    }
}

TEST_CASE("squared operator: the commutator term enters with a minus sign") {
    Rng rng(77);
    const auto& spec = three_qubit_specs()[0];
    double worst_correct = 0.0, best_flipped = 1e9;
    for (int t = 0; t < 100; ++t) {
        const auto ms = random_settings(spec, rng);
        worst_correct = std::max(worst_correct, bound_identity_check(ms));
        // The same identity with +A1 [B1,B2] [C1,C2] is not an identity.
        const M2 A1 = op(ms.per_party[0][0]), B1 = op(ms.per_party[1][0]), B2 = op(ms.per_party[1][1]);
        const M2 C1 = op(ms.per_party[2][0]), C2 = op(ms.per_party[2][1]);
        const auto b = hand_expanded(0, ms);
        const auto b2 = oracle::mul(b, b);
        const auto comm = oracle::kron({A1, oracle::comm2(B1, B2), oracle::comm2(C1, C2)});
        auto four = oracle::kron({oracle::id2(), oracle::id2(), oracle::id2()});
        for (auto& x : four.a) x *= 4.0;
        CHECK(oracle::max_diff(b2, oracle::add(four, comm, -1.0)) < 1e-12);
        best_flipped = std::min(best_flipped, oracle::max_diff(b2, oracle::add(four, comm, +1.0)));
    }
    CHECK(worst_correct < 1e-12);
    CHECK(best_flipped > 1e-3);
}

TEST_CASE("spectra stay within the quantum bound and reach it") {
    const unsigned ns[] = {3, 4, 5};
    const auto r = run_bound_check(40, 5, ns);
    CHECK(r.max_spectral_radius <= 2 * std::numbers::sqrt2 + 1e-9);
    CHECK(r.max_identity_deviation < 1e-10);
    CHECK(r.operators_checked == 40 * (6 + 4 + 20));
    // Settings with anticommuting pairs saturate 2 sqrt 2 for every n = 3 member.
    for (const auto& spec : three_qubit_specs()) {
        std::vector<std::vector<Mat2>> obs(3);
        for (unsigned p = 1; p <= 3; ++p) {
            obs[p - 1].push_back(pauli2(Axis::x));
            if (spec.settings_for(p) == 2) obs[p - 1].push_back(pauli2(Axis::y));
        }
        const auto ev = hermitian_eigenvalues(build_operator(spec, obs));
        CHECK(std::max(std::abs(ev.front()), std::abs(ev.back())) == doctest::Approx(quantum_bound(spec)).epsilon(1e-12));
    }
}

TEST_CASE("zero matrices are accepted when building") {
    const auto& spec = three_qubit_specs()[3];
    std::vector<std::vector<Mat2>> obs{{pauli2(Axis::z), pauli2(Axis::x)},
                                       {pauli2(Axis::z), Mat2{}},
                                       {pauli2(Axis::x)}};
    const auto b = build_operator(spec, obs);
    CHECK(b.is_hermitian());
}
