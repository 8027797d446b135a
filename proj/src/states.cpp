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
#include "bellset/states.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "bellset/errors.hpp"
#include "bellset/rng.hpp"

namespace bellset {

StateVector ggz(unsigned n, double alpha) {
    if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::DimensionMismatch, "ggz needs 2 <= n <= 10");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha));
    std::vector<cplx> amps(std::size_t{1} << n);
    amps.front() = alpha;
    amps.back() = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    return StateVector::normalized(n, std::move(amps));
}

StateVector biseparable(Bipartition lone, double a) {
    if (lone.lone < 1 || lone.lone > 3) throw Error(ErrorCode::InvalidQubitSet, "lone qubit must be 1, 2 or 3");
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::AlphaOutOfRange, "pair amplitude must lie in (0, 1)");
    const double b = std::sqrt(1.0 - a * a);
    // The lone qubit stays 0; the pair is 00 or 11.
    std::size_t pair_ones = 0;
    for (unsigned q = 1; q <= 3; ++q)
        if (q != lone.lone) pair_ones |= std::size_t{1} << (3 - q);
    std::vector<cplx> amps(8);
    amps[0] = a;
    amps[pair_ones] = b;
    return StateVector::normalized(3, std::move(amps));
}

StateVector product_state(std::span<const Bloch> directions) {
    const auto n = static_cast<unsigned>(directions.size());
    if (n < 1 || n > kMaxQubits) throw Error(ErrorCode::DimensionMismatch, "product state needs 1..10 qubits");
    std::vector<cplx> amps{1.0};
    for (const auto& v : directions) {
        const auto ang = angles_from_bloch(v);
        const cplx up = std::cos(ang.theta / 2.0);
        const cplx down = std::polar(std::sin(ang.theta / 2.0), ang.phi);
        std::vector<cplx> next;
        next.reserve(amps.size() * 2);
        for (const auto& x : amps) {
            next.push_back(x * up);
            next.push_back(x * down);
        }
        amps = std::move(next);
    }
    return StateVector::normalized(n, std::move(amps));
}

StateVector random_product_state(unsigned n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Bloch> dirs;
    for (unsigned q = 0; q < n; ++q) dirs.push_back(rng.unit_vector());
    return product_state(dirs);
}

void validate(const CanonicalParams& p, CanonicalCheck check) {
    const double floor = kTolerances.canonical_floor;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < p.lambda.size(); ++i) {
        if (!(p.lambda[i] >= 0.0)) {
            throw Error(ErrorCode::ConstraintViolation, "lambda" + std::to_string(i) + " >= 0");
        }
        norm2 += p.lambda[i] * p.lambda[i];
    }
    if (std::abs(norm2 - 1.0) > kTolerances.normalization) {
        throw Error(ErrorCode::ConstraintViolation, "sum lambda_i^2 = 1 (got " + std::to_string(norm2) + ")");
    }
    if (!(p.phi >= 0.0 && p.phi <= std::numbers::pi)) {
        throw Error(ErrorCode::ConstraintViolation, "phi in [0, pi]");
    }
    if (p.lambda[0] < floor) throw Error(ErrorCode::ConstraintViolation, "lambda0 != 0");
    if (check == CanonicalCheck::form_only) return;
    if (p.lambda[2] + p.lambda[4] < floor) throw Error(ErrorCode::ConstraintViolation, "lambda2 + lambda4 != 0");
    if (p.lambda[3] + p.lambda[4] < floor) throw Error(ErrorCode::ConstraintViolation, "lambda3 + lambda4 != 0");
}

StateVector canonical_state(const CanonicalParams& p, CanonicalCheck check) {
    validate(p, check);
    std::vector<cplx> amps(8);
    amps[0b000] = p.lambda[0];
    amps[0b100] = std::polar(p.lambda[1], p.phi);
    amps[0b101] = p.lambda[2];
    amps[0b110] = p.lambda[3];
    amps[0b111] = p.lambda[4];
    return StateVector(3, std::move(amps));
}

std::string ZeroMask::to_string() const {
    if (bits.none()) return "none";
    std::string out;
    for (unsigned k = 1; k <= 4; ++k)
        if (zeroes(k)) out += "l" + std::to_string(k);
    return out;
}

ZeroMask ZeroMask::parse(std::string_view text) {
    ZeroMask m;
    if (text.empty() || text == "none") return m;
    for (char c : text) {
        if (c == 'l') continue;
        if (c < '1' || c > '4') {
            throw Error(ErrorCode::ParseError, "bad zero mask '" + std::string(text) + "'");
        }
        m.bits.set(static_cast<std::size_t>(c - '1'));
    }
    return m;
}

ZeroMask ZeroMask::of(std::initializer_list<unsigned> ks) {
    ZeroMask m;
    for (unsigned k : ks) m.bits.set(k - 1);
    return m;
}

bool is_admissible(ZeroMask mask) {
    const bool kills_24 = mask.zeroes(2) && mask.zeroes(4);
    const bool kills_34 = mask.zeroes(3) && mask.zeroes(4);
    return !kills_24 && !kills_34;
}

std::vector<ZeroMask> campaign_masks() {
    return {ZeroMask{},           ZeroMask::of({1}),    ZeroMask::of({2}),    ZeroMask::of({3}),
            ZeroMask::of({4}),    ZeroMask::of({1, 2}), ZeroMask::of({1, 3}), ZeroMask::of({1, 4}),
            ZeroMask::of({2, 3}), ZeroMask::of({1, 2, 3})};
}

CanonicalParams sample_canonical(std::uint64_t seed, ZeroMask mask) {
    if (!is_admissible(mask)) throw Error(ErrorCode::InvalidMask, "mask " + mask.to_string() + " empties a required pair");
    Rng rng(seed);
    const double floor = kTolerances.canonical_floor;
    for (;;) {
        CanonicalParams p;
        double norm2 = 0.0;
        for (unsigned k = 0; k < 5; ++k) {
            const double x = std::abs(rng.normal());
            p.lambda[k] = (k > 0 && mask.zeroes(k)) ? 0.0 : x;
            norm2 += p.lambda[k] * p.lambda[k];
        }
        p.phi = rng.uniform(0.0, std::numbers::pi);
        if (!(norm2 > 0.0)) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& l : p.lambda) l *= inv;
        if (p.lambda[0] >= floor && p.lambda[2] + p.lambda[4] >= floor && p.lambda[3] + p.lambda[4] >= floor) {
            return p;
        }
    }
}

} // namespace bellset
