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
#include <span>
#include <string>
#include <vector>

#include "bellset/config.hpp"
#include "bellset/optimizer.hpp"
#include "bellset/states.hpp"

namespace bellset {

/// Seed of the state at `index` in a campaign seeded with `base`.
inline std::uint64_t state_seed(std::uint64_t base, std::uint64_t index) { return base + index; }

struct StageRecord {
    std::size_t state_index = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    bool violated = false;
    bool converged = true;
};

struct FilterReport {
    std::string stage; // ineq alias
    std::size_t tested = 0;
    std::size_t survivors = 0;
    std::vector<std::uint64_t> survivor_seeds;
    std::vector<StageRecord> records; // one per tested state, in state-index order
};

/// A state that failed to violate ineq1, with every stage value it went through.
struct SurvivorState {
    std::size_t state_index = 0;
    std::uint64_t seed = 0;
    CanonicalParams params;
    std::vector<double> stage_values;
};

struct CampaignConfig {
    std::size_t n_states = 2000;
    std::uint64_t seed = 42;
    ZeroMask mask;
    OptimizerConfig optimizer;
    double viol_tol = kTolerances.violation;
    /// States evaluated concurrently; 0 = hardware threads. Does not affect results.
    unsigned workers = 1;
};

struct FilterCampaign {
    CampaignConfig config;
    std::vector<FilterReport> stages;
    /// States surviving stage 1, in index order.
    std::vector<SurvivorState> survivors;

    std::size_t final_survivors() const { return stages.empty() ? 0 : stages.back().survivors; }
};

/// State i is sample_canonical(state_seed(seed, i), mask). Stage 1 tests all
/// states against ineq1, stage k the survivors of stage k-1 against ineqk;
/// stops after the first stage with no survivors, or after ineq6.
FilterCampaign run_filter_campaign(const CampaignConfig& cfg);

struct SweepRow {
    double alpha_sq = 0.0;
    double entropy = 0.0;
    double max_violation = 0.0;
    double closed_form = 0.0;
    bool converged = true;
};

/// 2 sqrt(1 + 4 a (1 - a)) for a = alpha^2.
double ggz_closed_form(double alpha_sq);

/// alpha^2 = i / (n_points + 1), i = 1..n_points, each row optimized on
/// ineq4 (single party 3, pm party 2). Throws InvalidSpec for n_points < 2.
std::vector<SweepRow> run_ggz_sweep(std::size_t n_points, const OptimizerConfig& opt = {}, unsigned workers = 1);

/// The family member used for n-qubit checks: odd n -> single 1, pm n;
/// even n -> pm 1.
InequalitySpec nqubit_family_member(unsigned n);

/// One row per alpha (the amplitude of |0...0>, not its square); entropy is
/// the mean single-qubit marginal entropy. Throws InvalidSpec unless 2 <= n <= 8.
std::vector<SweepRow> run_nqubit_ggz_check(unsigned n, std::span<const double> alphas,
                                           const OptimizerConfig& opt = {}, unsigned workers = 1);

} // namespace bellset
