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
#include "bellset/inequalities.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "bellset/errors.hpp"
#include "bellset/rng.hpp"

namespace bellset {

InequalitySpec InequalitySpec::odd(unsigned n, unsigned single, unsigned pm) {
    InequalitySpec s{n, Family::odd, single, pm};
    s.validate();
    return s;
}

InequalitySpec InequalitySpec::even(unsigned n, unsigned pm) {
    InequalitySpec s{n, Family::even, 0, pm};
    s.validate();
    return s;
}

void InequalitySpec::validate() const {
    if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::InvalidSpec, "n must lie in [2, 10]");
    if (pm_party < 1 || pm_party > n) throw Error(ErrorCode::InvalidSpec, "pm party out of range");
    if (kind == Family::odd) {
        if (single_party < 1 || single_party > n || single_party == pm_party) {
            throw Error(ErrorCode::InvalidSpec, "single party must differ from pm party and lie in 1..n");
        }
    } else {
        if (n % 2 != 0) throw Error(ErrorCode::InvalidSpec, "even family needs even n");
        if (single_party != 0) throw Error(ErrorCode::InvalidSpec, "even family has no single party");
    }
}

unsigned InequalitySpec::settings_for(unsigned party) const {
    return (kind == Family::odd && party == single_party) ? 1U : 2U;
}

unsigned InequalitySpec::observable_count() const { return kind == Family::odd ? 2 * n - 1 : 2 * n; }

std::string InequalitySpec::id() const {
    if (kind == Family::odd) {
        return "odd:n" + std::to_string(n) + ":s" + std::to_string(single_party) + ":p" + std::to_string(pm_party);
    }
    return "even:n" + std::to_string(n) + ":p" + std::to_string(pm_party);
}

std::string InequalitySpec::alias() const {
    const auto& six = three_qubit_specs();
    for (std::size_t i = 0; i < six.size(); ++i)
        if (six[i] == *this) return "ineq" + std::to_string(i + 1);
    return id();
}

namespace {

unsigned parse_field(std::string_view field, char tag, std::string_view whole) {
    unsigned value = 0;
    if (field.size() < 2 || field.front() != tag) {
        throw Error(ErrorCode::ParseError, "bad inequality id '" + std::string(whole) + "'");
    }
    const auto [ptr, ec] = std::from_chars(field.data() + 1, field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::ParseError, "bad inequality id '" + std::string(whole) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

InequalitySpec InequalitySpec::parse(std::string_view text) {
    if (text.size() == 5 && text.substr(0, 4) == "ineq" && text[4] >= '1' && text[4] <= '6') {
        return three_qubit_specs()[static_cast<std::size_t>(text[4] - '1')];
    }
    const auto parts = split(text, ':');
    try {
        if (parts.size() == 4 && parts[0] == "odd") {
            return odd(parse_field(parts[1], 'n', text), parse_field(parts[2], 's', text),
                       parse_field(parts[3], 'p', text));
        }
        if (parts.size() == 3 && parts[0] == "even") {
            return even(parse_field(parts[1], 'n', text), parse_field(parts[2], 'p', text));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidSpec) throw Error(ErrorCode::ParseError, e.what());
        throw;
    }
    throw Error(ErrorCode::ParseError, "bad inequality id '" + std::string(text) + "'");
}

const std::array<InequalitySpec, 6>& three_qubit_specs() {
    static const std::array<InequalitySpec, 6> specs{
        InequalitySpec{3, Family::odd, 1, 3}, InequalitySpec{3, Family::odd, 2, 3},
        InequalitySpec{3, Family::odd, 1, 2}, InequalitySpec{3, Family::odd, 3, 2},
        InequalitySpec{3, Family::odd, 3, 1}, InequalitySpec{3, Family::odd, 2, 1},
    };
    return specs;
}

std::vector<InequalitySpec> enumerate_specs(unsigned n) {
    if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::InvalidSpec, "n must lie in [2, 10]");
    if (n == 3) {
        const auto& six = three_qubit_specs();
        return {six.begin(), six.end()};
    }
    std::vector<InequalitySpec> out;
    if (n % 2 == 0) {
        for (unsigned pm = 1; pm <= n; ++pm) out.push_back(InequalitySpec::even(n, pm));
        return out;
    }
    for (unsigned pm = n; pm >= 1; --pm)
        for (unsigned s = 1; s <= n; ++s)
            if (s != pm) out.push_back(InequalitySpec::odd(n, s, pm));
    return out;
}

void check_arity(const InequalitySpec& spec, const MeasurementSettings& ms) {
    if (ms.per_party.size() != spec.n) {
        throw Error(ErrorCode::ArityMismatch, "expected settings for " + std::to_string(spec.n) + " parties");
    }
    for (unsigned p = 1; p <= spec.n; ++p) {
        if (ms.per_party[p - 1].size() != spec.settings_for(p)) {
            throw Error(ErrorCode::ArityMismatch, "party " + std::to_string(p) + " needs " +
                                                      std::to_string(spec.settings_for(p)) + " observable(s)");
        }
    }
}

std::vector<SlotRef> slots(const InequalitySpec& spec) {
    std::vector<SlotRef> out;
    for (unsigned p = 1; p <= spec.n; ++p)
        for (unsigned k = 0; k < spec.settings_for(p); ++k) out.push_back({p, k});
    return out;
}

std::vector<BellTerm> expand_terms(const InequalitySpec& spec) {
    spec.validate();
    std::vector<SlotRef> x_part;
    std::vector<SlotRef> y_part;
    for (unsigned p = 1; p <= spec.n; ++p) {
        if (p == spec.pm_party) continue;
        if (spec.has_single() && p == spec.single_party) {
            (spec.single_in_plus_term() ? x_part : y_part).push_back({p, 0});
        } else {
            x_part.push_back({p, 0});
            y_part.push_back({p, 1});
        }
    }
    auto with_pm = [&](std::vector<SlotRef> part, unsigned slot) {
        part.push_back({spec.pm_party, slot});
        std::sort(part.begin(), part.end(), [](const SlotRef& a, const SlotRef& b) { return a.party < b.party; });
        return part;
    };
    return {
        BellTerm{+1.0, with_pm(x_part, 0)},
        BellTerm{+1.0, with_pm(x_part, 1)},
        BellTerm{+1.0, with_pm(y_part, 0)},
        BellTerm{-1.0, with_pm(y_part, 1)},
    };
}

ComplexMatrix build_operator(const InequalitySpec& spec, const std::vector<std::vector<Mat2>>& observables) {
    if (observables.size() != spec.n) throw Error(ErrorCode::ArityMismatch, "party count");
    for (unsigned p = 1; p <= spec.n; ++p) {
        if (observables[p - 1].size() != spec.settings_for(p)) {
            throw Error(ErrorCode::ArityMismatch, "party " + std::to_string(p) + " observable count");
        }
    }
    const std::size_t dim = std::size_t{1} << spec.n;
    ComplexMatrix total(dim);
    for (const auto& term : expand_terms(spec)) {
        std::vector<ComplexMatrix> factors(spec.n, ComplexMatrix::identity(2));
        for (const auto& f : term.factors)
            factors[f.party - 1] = ComplexMatrix::from_mat2(observables[f.party - 1][f.slot]);
        total += tensor(factors) * cplx{term.sign, 0.0};
    }
    return total;
}

ComplexMatrix build_operator(const InequalitySpec& spec, const MeasurementSettings& ms) {
    check_arity(spec, ms);
    std::vector<std::vector<Mat2>> obs(spec.n);
    for (unsigned p = 0; p < spec.n; ++p)
        for (const auto& a : ms.per_party[p]) {
            const ComplexMatrix o = observable_from_angles(a);
            obs[p].push_back({o(0, 0), o(0, 1), o(1, 0), o(1, 1)});
        }
    return build_operator(spec, obs);
}

double classical_bound(const InequalitySpec& spec) {
    spec.validate();
    return 2.0;
}

double quantum_bound(const InequalitySpec& spec) {
    spec.validate();
    return 2.0 * std::numbers::sqrt2;
}

double bound_identity_check(const MeasurementSettings& ms) {
    const InequalitySpec& spec = three_qubit_specs()[0];
    const ComplexMatrix b = build_operator(spec, ms);
    const ComplexMatrix a1 = observable_from_angles(ms.per_party[0][0]);
    const ComplexMatrix b1 = observable_from_angles(ms.per_party[1][0]);
    const ComplexMatrix b2 = observable_from_angles(ms.per_party[1][1]);
    const ComplexMatrix c1 = observable_from_angles(ms.per_party[2][0]);
    const ComplexMatrix c2 = observable_from_angles(ms.per_party[2][1]);
    const ComplexMatrix rhs =
        ComplexMatrix::identity(8) * cplx{4.0, 0.0} - tensor({a1, commutator(b1, b2), commutator(c1, c2)});
    return (b * b).max_abs_diff(rhs);
}

MeasurementSettings random_settings(const InequalitySpec& spec, Rng& rng) {
    MeasurementSettings ms;
    ms.per_party.resize(spec.n);
    for (unsigned p = 1; p <= spec.n; ++p)
        for (unsigned k = 0; k < spec.settings_for(p); ++k)
            ms.per_party[p - 1].push_back(angles_from_bloch(rng.unit_vector()));
    return ms;
}

} // namespace bellset

namespace bellset {

BoundCheckReport run_bound_check(std::size_t samples, std::uint64_t seed, std::span<const unsigned> qubit_counts) {
    BoundCheckReport report;
    for (unsigned n : qubit_counts) {
        const auto specs = enumerate_specs(n);
        for (std::size_t k = 0; k < specs.size(); ++k) {
            Rng rng = Rng::stream(seed, (std::uint64_t{n} << 32) | k);
            for (std::size_t i = 0; i < samples; ++i) {
                const MeasurementSettings ms = random_settings(specs[k], rng);
                for (double ev : hermitian_eigenvalues(build_operator(specs[k], ms)))
                    report.max_spectral_radius = std::max(report.max_spectral_radius, std::abs(ev));
                ++report.operators_checked;
                if (n == 3 && k == 0)
                    report.max_identity_deviation = std::max(report.max_identity_deviation, bound_identity_check(ms));
            }
        }
    }
    return report;
}

} // namespace bellset
