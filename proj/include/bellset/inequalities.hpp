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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellset/qcore.hpp"

/// Bell operators of the form  X (P + P') + Y (P - P').
///
/// P, P' are the two observables of the "pm" party. Every other party owns
/// two observables, the first used in the plus term and the second in the
/// minus term, except (odd family only) a single-measurement party whose one
/// observable appears in exactly one of the terms:
///
///   odd family  (n(n-1) members): single party s != pm; its observable sits
///                in the plus term when pm == n, otherwise in the minus term.
///   even family (n members):      no single party; correlation operator.
///
/// For n = 3 the six odd-family members, with A/B/C the qubits 1/2/3, are
///   ineq1 (s=1,p=3)  A1 B1 (C1+C2) + B2 (C1-C2)
///   ineq2 (s=2,p=3)  A1 B1 (C1+C2) + A2 (C1-C2)
///   ineq3 (s=1,p=2)  (B1+B2) C1 + A1 (B1-B2) C2
///   ineq4 (s=3,p=2)  A1 (B1+B2) + A2 (B1-B2) C1
///   ineq5 (s=3,p=1)  (A1+A2) B1 + (A1-A2) B2 C1
///   ineq6 (s=2,p=1)  (A1+A2) C1 + (A1-A2) B1 C2
/// Local bound 2, quantum bound 2 sqrt 2 for every member.
namespace bellset {

enum class Family { odd, even };

struct InequalitySpec {
    unsigned n = 3;
    Family kind = Family::odd;
    unsigned single_party = 0; // 0 for the even family
    unsigned pm_party = 3;

    static InequalitySpec odd(unsigned n, unsigned single, unsigned pm);
    static InequalitySpec even(unsigned n, unsigned pm);

    /// Throws InvalidSpec.
    void validate() const;

    bool has_single() const { return kind == Family::odd; }
    bool single_in_plus_term() const { return pm_party == n; }
    /// 1 for the single party, 2 otherwise.
    unsigned settings_for(unsigned party) const;
    /// 2n - 1 (odd) or 2n (even).
    unsigned observable_count() const;

    /// "odd:n{n}:s{single}:p{pm}" or "even:n{n}:p{pm}".
    std::string id() const;
    /// "ineq1".."ineq6" for the n = 3 members, id() otherwise.
    std::string alias() const;
    /// Accepts id() strings and the ineqK aliases. Throws ParseError.
    static InequalitySpec parse(std::string_view text);

    bool operator==(const InequalitySpec&) const = default;
};

/// ineq1..ineq6 in order.
const std::array<InequalitySpec, 6>& three_qubit_specs();

/// Odd n: all n(n-1) ordered (single, pm) pairs (for n = 3 in ineq1..ineq6
/// order, otherwise pm descending then single ascending). Even n: n members,
/// pm = 1..n. Throws InvalidSpec for n < 2.
std::vector<InequalitySpec> enumerate_specs(unsigned n);

/// Per-party observables ordered by party; one entry for the single party and
/// two for everyone else.
struct MeasurementSettings {
    std::vector<std::vector<ObservableAngles>> per_party;
};

/// Throws ArityMismatch.
void check_arity(const InequalitySpec& spec, const MeasurementSettings& ms);

/// Reference to one observable: party (1-based) and slot (0 or 1).
struct SlotRef {
    unsigned party;
    unsigned slot;
    bool operator==(const SlotRef&) const = default;
};

/// Flat list of all slots in party order.
std::vector<SlotRef> slots(const InequalitySpec& spec);

/// One signed product of observables.
struct BellTerm {
    double sign;
    std::vector<SlotRef> factors; // ascending party, identity elsewhere
};

/// The operator as four signed product terms:
///   +X P, +X P', +Y P, -Y P'.
std::vector<BellTerm> expand_terms(const InequalitySpec& spec);

/// Dense 2^n x 2^n operator. Throws ArityMismatch.
ComplexMatrix build_operator(const InequalitySpec& spec, const MeasurementSettings& ms);

/// Same, from explicit 2x2 matrices per party and slot (zero or non-dichotomic
/// matrices allowed).
ComplexMatrix build_operator(const InequalitySpec& spec, const std::vector<std::vector<Mat2>>& observables);

double classical_bound(const InequalitySpec& spec);
double quantum_bound(const InequalitySpec& spec);

/// max |B^2 - (4I - A1 (x) [B1,B2] (x) [C1,C2])| for ineq1 built from `ms`.
double bound_identity_check(const MeasurementSettings& ms);

class Rng;
/// Independent uniformly random direction for every slot.
MeasurementSettings random_settings(const InequalitySpec& spec, Rng& rng);

struct BoundCheckReport {
    double max_identity_deviation = 0.0; // over `samples` ineq1 settings
    double max_spectral_radius = 0.0;    // over every spec of every requested n
    std::size_t operators_checked = 0;
};

/// For each n, each member of enumerate_specs(n) is built from `samples`
/// seeded random settings and its largest |eigenvalue| recorded; the ineq1
/// settings of n = 3 also feed bound_identity_check.
BoundCheckReport run_bound_check(std::size_t samples, std::uint64_t seed, std::span<const unsigned> qubit_counts);

} // namespace bellset
