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

namespace bellset {

/// Every numerical tolerance used by the library. The results being checked
/// are exact identities, so a breach means a bug rather than noise.
struct Tolerances {
    double normalization = 1e-12; // sum |amp|^2 == 1
    double hermitian = 1e-12;     // M == M^dagger entrywise
    double observable = 1e-12;    // O^2 == I, tr O == 0
    double imaginary = 1e-10;     // Im <s|M|s> for Hermitian M
    double psd = 1e-10;           // smallest reduced-state eigenvalue
    double alpha_norm = 1e-10;    // alpha^2 + beta^2 == 1 for tangle()
    double canonical_floor = 1e-4; // lambda0, lambda2+lambda4, lambda3+lambda4 lower bounds
    double violation = 1e-7;      // value > 2 + violation counts as a violation
    double equality = 1e-5;       // two violations considered equal
    double quantum_bound = 1e-9;  // slack on 2*sqrt(2)
};

inline constexpr Tolerances kTolerances{};

} // namespace bellset
