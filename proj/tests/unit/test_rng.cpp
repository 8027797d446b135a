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

#include "bellset/rng.hpp"

using namespace bellset;

TEST_CASE("same seed, same stream") {
    Rng a(123), b(123), c(124);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        differs |= (x != c.uniform());
    }
    CHECK(differs);
    CHECK(Rng::stream(1, 2).next_u64() == Rng::stream(1, 2).next_u64());
    CHECK(Rng::stream(1, 2).next_u64() != Rng::stream(1, 3).next_u64());
    CHECK(Rng::stream(1, 2).next_u64() != Rng::stream(2, 1).next_u64());
}

TEST_CASE("uniform and normal moments") {
    Rng r(9);
    const int n = 200000;
    double su = 0, sn = 0, sn2 = 0;
    double lo = 1, hi = 0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        su += u;
        const double z = r.normal();
        sn += z;
        sn2 += z * z;
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::abs(sn / n) < 0.01);
    CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("unit vectors are isotropic") {
    Rng r(4);
    double mean[3] = {0, 0, 0}, zz = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto v = r.unit_vector();
        CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == doctest::Approx(1.0).epsilon(1e-14));
        for (int k = 0; k < 3; ++k) mean[k] += v[k] / n;
        zz += v[2] * v[2] / n;
    }
    for (double m : mean) CHECK(std::abs(m) < 0.01);
    CHECK(zz == doctest::Approx(1.0 / 3).epsilon(0.02));
}

TEST_CASE("random unitaries are unitary") {
    Rng r(8);
    for (int t = 0; t < 100; ++t) {
        const Mat2 u = r.unitary();
        // U^dagger U = I
        const cplx a = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
        const cplx b = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
        const cplx d = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
        CHECK(std::abs(a - 1.0) < 1e-14);
        CHECK(std::abs(b) < 1e-14);
        CHECK(std::abs(d - 1.0) < 1e-14);
    }
}

TEST_CASE("splitmix64 known value") {
    // First output of the reference generator seeded with 0.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}
