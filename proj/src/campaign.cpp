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
#include "bellset/campaign.hpp"

#include <cmath>

#include "bellset/errors.hpp"
#include "bellset/parallel.hpp"

namespace bellset {

FilterCampaign run_filter_campaign(const CampaignConfig& cfg) {
    if (cfg.n_states < 1) throw Error(ErrorCode::InvalidSpec, "campaign needs at least one state");
    FilterCampaign out;
    out.config = cfg;

    // Inner optimizer runs serially; parallelism lives at the state level.
    OptimizerConfig opt = cfg.optimizer;
    opt.workers = 1;

    std::vector<std::size_t> pending(cfg.n_states);
    for (std::size_t i = 0; i < cfg.n_states; ++i) pending[i] = i;
    std::vector<CanonicalParams> params(cfg.n_states);
    std::vector<std::vector<double>> values(cfg.n_states);

    const auto& specs = three_qubit_specs();
    for (std::size_t stage = 0; stage < specs.size() && !pending.empty(); ++stage) {
        std::vector<double> stage_values(pending.size());
        std::vector<char> stage_converged(pending.size(), 1);
        parallel_for(pending.size(), cfg.workers, [&](std::size_t k) {
            const std::size_t idx = pending[k];
            if (stage == 0) params[idx] = sample_canonical(state_seed(cfg.seed, idx), cfg.mask);
            const StateVector s = canonical_state(params[idx]);
            const ViolationResult r = seesaw_maximize(s, specs[stage], opt);
            stage_values[k] = r.value;
            stage_converged[k] = r.converged ? 1 : 0;
        });

        FilterReport report;
        report.stage = specs[stage].alias();
        report.tested = pending.size();
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const std::size_t idx = pending[k];
            values[idx].push_back(stage_values[k]);
            const bool violated = stage_values[k] > 2.0 + cfg.viol_tol;
            report.records.push_back({idx, state_seed(cfg.seed, idx), stage_values[k], violated,
                                      stage_converged[k] != 0});
            if (!violated) {
                next.push_back(idx);
                report.survivor_seeds.push_back(state_seed(cfg.seed, idx));
            }
        }
        report.survivors = next.size();
        out.stages.push_back(std::move(report));
        if (stage == 0) {
            for (std::size_t idx : next) out.survivors.push_back({idx, state_seed(cfg.seed, idx), params[idx], {}});
        }
        pending = std::move(next);
    }
    for (auto& s : out.survivors) s.stage_values = values[s.state_index];
    return out;
}

double ggz_closed_form(double alpha_sq) { return 2.0 * std::sqrt(1.0 + 4.0 * alpha_sq * (1.0 - alpha_sq)); }

std::vector<SweepRow> run_ggz_sweep(std::size_t n_points, const OptimizerConfig& opt, unsigned workers) {
    if (n_points < 2) throw Error(ErrorCode::InvalidSpec, "sweep needs at least two points");
    const InequalitySpec spec = three_qubit_specs()[3];
    OptimizerConfig inner = opt;
    inner.workers = 1;
    std::vector<SweepRow> rows(n_points);
    parallel_for(n_points, workers, [&](std::size_t i) {
        const double a2 = static_cast<double>(i + 1) / static_cast<double>(n_points + 1);
        const double alpha = std::sqrt(a2);
        const StateVector s = ggz(3, alpha);
        const ViolationResult r = seesaw_maximize(s, spec, inner);
        rows[i] = {a2, avg_bipartition_entropy(s), r.value, 2.0 * std::sqrt(1.0 + tangle(alpha, std::sqrt(1.0 - a2))),
                   r.converged};
    });
    return rows;
}

InequalitySpec nqubit_family_member(unsigned n) {
    return (n % 2 == 1) ? InequalitySpec::odd(n, 1, n) : InequalitySpec::even(n, 1);
}

std::vector<SweepRow> run_nqubit_ggz_check(unsigned n, std::span<const double> alphas, const OptimizerConfig& opt,
                                           unsigned workers) {
    if (n < 2 || n > 8) throw Error(ErrorCode::InvalidSpec, "n-qubit check needs 2 <= n <= 8");
    const InequalitySpec spec = nqubit_family_member(n);
    OptimizerConfig inner = opt;
    inner.workers = 1;
    std::vector<SweepRow> rows(alphas.size());
    parallel_for(alphas.size(), workers, [&](std::size_t i) {
        const double alpha = alphas[i];
        const StateVector s = ggz(n, alpha);
        const auto h = single_qubit_entropies(s);
        double mean = 0.0;
        for (double x : h) mean += x;
        mean /= static_cast<double>(h.size());
        const double a2 = alpha * alpha;
        const ViolationResult r = seesaw_maximize(s, spec, inner);
        rows[i] = {a2, mean, r.value, ggz_closed_form(a2), r.converged};
    });
    return rows;
}

} // namespace bellset
