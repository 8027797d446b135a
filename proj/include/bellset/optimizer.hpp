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
#include <vector>

#include "bellset/inequalities.hpp"
#include "bellset/qcore.hpp"

namespace bellset {

struct OptimizerConfig {
    unsigned restarts = 20;
    unsigned max_sweeps = 500;
    double convergence_eps = 1e-10;
    std::uint64_t rng_seed = 0;
    /// Restarts evaluated concurrently; 0 = hardware threads. Does not affect results.
    unsigned workers = 1;
    /// Keep the objective after every single-observable update of the winning restart.
    bool record_history = false;

    /// Throws InvalidSpec when restarts, max_sweeps or convergence_eps is not positive.
    void validate() const;
};

struct ViolationResult {
    double value = 0.0;
    MeasurementSettings settings;
    unsigned sweeps_used = 0;
    unsigned restart_index = 0;
    /// False only when max_sweeps ran out while the last sweep still gained
    /// more than 100 * convergence_eps.
    bool converged = true;
    std::vector<double> history;
};

/// The expectation restricted to one observable: <B> = offset + gradient . n
/// where n is the Bloch direction of that observable.
struct AffineResponse {
    double offset = 0.0;
    Bloch gradient{};
};

/// Expectation of the spec's operator via its product-term expansion (no
/// dense matrix). Throws ArityMismatch / DimensionMismatch.
double evaluate(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& ms);

/// Affine dependence of the expectation on the observable at `slot`, found by
/// evaluating with that observable replaced by X, Y, Z and by the zero matrix.
AffineResponse effective_bloch(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& ms,
                               SlotRef slot);

/// Bell expectation as a function of one Bloch vector per slot (slots() order).
/// Holds scratch buffers: one instance per thread.
class BellObjective {
public:
    BellObjective(const StateVector& s, const InequalitySpec& spec);

    std::size_t slot_count() const { return slots_.size(); }
    double value(const std::vector<Bloch>& dirs);
    /// Same quantity as effective_bloch, computed from 2x2 overlaps.
    AffineResponse response(const std::vector<Bloch>& dirs, std::size_t slot_index);

private:
    struct Term {
        double sign;
        std::vector<std::size_t> slot_indices;
    };

    const StateVector& state_;
    InequalitySpec spec_;
    std::vector<SlotRef> slots_;
    std::vector<Term> terms_;
    std::vector<cplx> scratch_;
};

/// Multi-start see-saw: every restart draws uniform angles from its own
/// stream (rng_seed, restart) and then repeatedly sets each observable to
/// the normalized gradient of its affine response (exact coordinate maximum)
/// until a full sweep gains less than convergence_eps. The best restart wins;
/// ties go to the lower restart index.
ViolationResult seesaw_maximize(const StateVector& s, const InequalitySpec& spec, const OptimizerConfig& cfg = {});

/// A single see-saw run from the given starting settings.
ViolationResult seesaw_from(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& start,
                            const OptimizerConfig& cfg = {});

/// Independent lower bound for three-qubit specs: every observable except
/// the pm pair runs over a (theta, phi) grid with `steps` points per angle
/// (theta endpoints included, poles counted once); the pm pair is maximized
/// in closed form. Correlations come from dense Pauli-string expectations.
/// Throws DimensionMismatch for n != 3 and ResolutionTooCoarse for steps < 4.
double grid_oracle(const StateVector& s, const InequalitySpec& spec, unsigned steps);

} // namespace bellset
