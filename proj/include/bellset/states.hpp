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
#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellset/qcore.hpp"

namespace bellset {

/// alpha|0...0> + beta|1...1>, beta = sqrt(1 - alpha^2) >= 0.
/// Throws AlphaOutOfRange unless alpha in [0, 1]; DimensionMismatch unless 2 <= n <= 10.
StateVector ggz(unsigned n, double alpha);

/// Identifies the unentangled qubit of a biseparable three-qubit state.
struct Bipartition {
    unsigned lone = 1; // 1, 2 or 3
};

/// |0> on the lone qubit, a|00> + sqrt(1-a^2)|11> on the other two (in
/// ascending qubit order). Throws AlphaOutOfRange unless 0 < a < 1 and
/// InvalidQubitSet unless lone in {1, 2, 3}.
StateVector biseparable(Bipartition lone, double a);

/// Product of single-qubit states, each the +1 eigenvector of v . sigma.
StateVector product_state(std::span<const Bloch> directions);
StateVector random_product_state(unsigned n, std::uint64_t seed);

/// Parameters of
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct CanonicalParams {
    std::array<double, 5> lambda{};
    double phi = 0.0; // [0, pi]
};

enum class CanonicalCheck {
    /// l0 > 0, l2 + l4 > 0, l3 + l4 > 0 (the genuinely entangled region).
    genuine,
    /// Only l0 > 0; admits the degenerate biseparable and product corners.
    form_only,
};

/// Throws ConstraintViolation naming the first failed condition. Strict
/// inequalities are enforced as ">= kTolerances.canonical_floor".
void validate(const CanonicalParams& p, CanonicalCheck check = CanonicalCheck::genuine);

StateVector canonical_state(const CanonicalParams& p, CanonicalCheck check = CanonicalCheck::genuine);

/// Which of lambda1..lambda4 are forced to zero. Bit k-1 stands for lambda_k.
struct ZeroMask {
    std::bitset<4> bits;

    bool zeroes(unsigned k) const { return bits.test(k - 1); }
    bool operator==(const ZeroMask&) const = default;

    /// "none" or e.g. "l1l2l3".
    std::string to_string() const;
    /// Accepts "none", "", "l1l2l3" or "123". Throws ParseError.
    static ZeroMask parse(std::string_view text);
    static ZeroMask of(std::initializer_list<unsigned> ks);
};

/// True unless the mask forces lambda2 + lambda4 = 0 or lambda3 + lambda4 = 0.
bool is_admissible(ZeroMask mask);

/// The empty mask followed by the nine degenerate classes: only l1, l2, l3,
/// l4, then l1l2, l1l3, l1l4, l2l3, l1l2l3. These are exactly the admissible masks.
std::vector<ZeroMask> campaign_masks();

/// Deterministic in (seed, mask). Unmasked lambdas are |N(0,1)| draws scaled
/// to unit norm (uniform on the positive orthant of the sphere), phi is
/// uniform on [0, pi]; draws closer than the floor to an excluded boundary
/// are rejected and redrawn. Throws InvalidMask for inadmissible masks.
CanonicalParams sample_canonical(std::uint64_t seed, ZeroMask mask);

} // namespace bellset
