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
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bellset/errors.hpp"
#include "bellset/optimizer.hpp"

namespace bellset {

namespace {

// Pauli-string correlations T[a][b][c] = <s| s_a (x) s_b (x) s_c |s>, index 0 = identity.
using Correlations = std::array<std::array<std::array<double, 4>, 4>, 4>;
using Vec4 = std::array<double, 4>;
using Vec3 = std::array<double, 3>;

Correlations correlations(const StateVector& s) {
    const ComplexMatrix basis[4] = {ComplexMatrix::identity(2), pauli(Axis::x), pauli(Axis::y), pauli(Axis::z)};
    Correlations t{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) t[a][b][c] = expectation(s, tensor({basis[a], basis[b], basis[c]}));
    return t;
}

// Contract every party except `pm` with its 4-vector; the free pm index runs over x, y, z.
Vec3 contract(const Correlations& t, const std::array<Vec4, 3>& v, unsigned pm) {
    Vec3 out{};
    for (int k = 1; k < 4; ++k) {
        double acc = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const int idx[3] = {a, b, c};
                    if (idx[pm - 1] != k) continue;
                    double w = t[a][b][c];
                    for (unsigned q = 1; q <= 3; ++q)
                        if (q != pm) w *= v[q - 1][static_cast<std::size_t>(idx[q - 1])];
                    acc += w;
                }
        out[static_cast<std::size_t>(k - 1)] = acc;
    }
    return out;
}

std::vector<Vec4> direction_grid(unsigned steps) {
    std::vector<Vec4> grid;
    for (unsigned i = 0; i < steps; ++i) {
        const double theta = std::numbers::pi * i / (steps - 1);
        const bool pole = (i == 0 || i + 1 == steps);
        for (unsigned j = 0; j < (pole ? 1U : steps); ++j) {
            const double phi = 2.0 * std::numbers::pi * j / steps;
            grid.push_back({0.0, std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
        }
    }
    return grid;
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

} // namespace

double grid_oracle(const StateVector& s, const InequalitySpec& spec, unsigned steps) {
    spec.validate();
    if (spec.n != 3 || s.qubits() != 3) throw Error(ErrorCode::DimensionMismatch, "grid oracle handles three qubits only");
    if (steps < 4) throw Error(ErrorCode::ResolutionTooCoarse, "need at least 4 steps per angle");

    const Correlations t = correlations(s);
    const std::vector<Vec4> grid = direction_grid(steps);
    const Vec4 identity{1.0, 0.0, 0.0, 0.0};
    const unsigned pm = spec.pm_party;
    const unsigned single = spec.single_party;
    unsigned other = 1;
    while (other == pm || other == single) ++other;

    // Plus-term vector X.P and minus-term vector Y.P as functions of the grid
    // directions: `paired[i][j]` depends on (single = i, other = j), `alone[j]`
    // on the other party only.
    const std::size_t g = grid.size();
    std::vector<Vec3> paired(g * g);
    std::vector<Vec3> alone(g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            std::array<Vec4, 3> v{identity, identity, identity};
            v[single - 1] = grid[i];
            v[other - 1] = grid[j];
            paired[i * g + j] = contract(t, v, pm);
        }
    for (std::size_t j = 0; j < g; ++j) {
        std::array<Vec4, 3> v{identity, identity, identity};
        v[other - 1] = grid[j];
        alone[j] = contract(t, v, pm);
    }

    // The single party shares a term with the other party's first (plus) or
    // second (minus) observable; the other term carries the remaining one alone.
    const bool plus = spec.single_in_plus_term();
    double best = -1e300;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            const Vec3& with_single = paired[i * g + j];
            for (std::size_t k = 0; k < g; ++k) {
                const Vec3& x = plus ? with_single : alone[k];
                const Vec3& y = plus ? alone[k] : with_single;
                const Vec3 sum{x[0] + y[0], x[1] + y[1], x[2] + y[2]};
                const Vec3 diff{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
                best = std::max(best, norm3(sum) + norm3(diff));
            }
        }
    return best;
}

} // namespace bellset
