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

#include <cstdint>
#include <random>

#include "bellset/qcore.hpp"

namespace bellset {

/// Seedable mt19937_64 stream. The distribution transforms are written out
/// here instead of using <random>'s distributions, whose output is
/// implementation-defined, so a seed means the same numbers on every toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream for (seed, index), e.g. one per optimizer restart.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal (Box-Muller).
    double normal();
    /// Uniform direction on the unit sphere.
    Bloch unit_vector();
    /// Haar-random single-qubit unitary.
    Mat2 unitary();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace bellset
