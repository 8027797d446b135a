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
#include "bellset/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bellset/errors.hpp"
#include "bellset/parallel.hpp"
#include "bellset/rng.hpp"

namespace bellset {

void OptimizerConfig::validate() const {
    if (restarts < 1) throw Error(ErrorCode::InvalidSpec, "restarts must be >= 1");
    if (max_sweeps < 1) throw Error(ErrorCode::InvalidSpec, "max_sweeps must be >= 1");
    if (!(convergence_eps > 0.0)) throw Error(ErrorCode::InvalidSpec, "convergence_eps must be > 0");
}

namespace {

void require_state_matches(const StateVector& s, const InequalitySpec& spec) {
    spec.validate();
    if (s.qubits() != spec.n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state has " + std::to_string(s.qubits()) + " qubits, spec " + std::to_string(spec.n));
    }
}

double term_sum(const StateVector& s, const InequalitySpec& spec, const std::vector<std::vector<Mat2>>& obs) {
    double total = 0.0;
    std::vector<LocalFactor> factors;
    for (const auto& term : expand_terms(spec)) {
        factors.clear();
        for (const auto& f : term.factors) factors.push_back({f.party, obs[f.party - 1][f.slot]});
        total += term.sign * product_expectation(s, factors).real();
    }
    return total;
}

std::vector<std::vector<Mat2>> observables_of(const InequalitySpec& spec, const MeasurementSettings& ms) {
    check_arity(spec, ms);
    std::vector<std::vector<Mat2>> obs(spec.n);
    for (unsigned p = 0; p < spec.n; ++p)
        for (const auto& a : ms.per_party[p]) {
            const ComplexMatrix o = observable_from_angles(a);
            obs[p].push_back({o(0, 0), o(0, 1), o(1, 0), o(1, 1)});
        }
    return obs;
}

double norm3(const Bloch& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

MeasurementSettings settings_from(const InequalitySpec& spec, const std::vector<Bloch>& dirs) {
    MeasurementSettings ms;
    ms.per_party.resize(spec.n);
    const auto all = slots(spec);
    for (std::size_t i = 0; i < all.size(); ++i) ms.per_party[all[i].party - 1].push_back(angles_from_bloch(dirs[i]));
    return ms;
}

std::vector<Bloch> dirs_from(const InequalitySpec& spec, const MeasurementSettings& ms) {
    check_arity(spec, ms);
    std::vector<Bloch> dirs;
    for (const auto& ref : slots(spec)) dirs.push_back(bloch_from_angles(ms.per_party[ref.party - 1][ref.slot]));
    return dirs;
}

struct RunOutcome {
    double value = 0.0;
    std::vector<Bloch> dirs;
    unsigned sweeps = 0;
    bool converged = true;
    std::vector<double> history;
};

RunOutcome run_seesaw(const StateVector& s, const InequalitySpec& spec, std::vector<Bloch> dirs,
                      const OptimizerConfig& cfg) {
    BellObjective objective(s, spec);
    RunOutcome out;
    double value = objective.value(dirs);
    if (cfg.record_history) out.history.push_back(value);
    double improvement = 0.0;
    unsigned sweep = 0;
    while (sweep < cfg.max_sweeps) {
        ++sweep;
        const double before = value;
        for (std::size_t t = 0; t < objective.slot_count(); ++t) {
            const AffineResponse r = objective.response(dirs, t);
            const double norm = norm3(r.gradient);
            // A vanishing gradient leaves every direction optimal; keep the current one.
            if (norm > 0.0) {
                dirs[t] = {r.gradient[0] / norm, r.gradient[1] / norm, r.gradient[2] / norm};
                value = r.offset + norm;
            }
            if (cfg.record_history) out.history.push_back(value);
        }
        improvement = value - before;
        if (improvement < cfg.convergence_eps) break;
    }
    out.sweeps = sweep;
    out.converged = !(sweep == cfg.max_sweeps && improvement > 100.0 * cfg.convergence_eps);
    out.value = objective.value(dirs);
    out.dirs = std::move(dirs);
    return out;
}

ViolationResult to_result(const InequalitySpec& spec, RunOutcome&& run, unsigned restart) {
    ViolationResult r;
    r.value = run.value;
    r.settings = settings_from(spec, run.dirs);
    r.sweeps_used = run.sweeps;
    r.restart_index = restart;
    r.converged = run.converged;
    r.history = std::move(run.history);
    return r;
}

} // namespace

double evaluate(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& ms) {
    require_state_matches(s, spec);
    return term_sum(s, spec, observables_of(spec, ms));
}

AffineResponse effective_bloch(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& ms,
                               SlotRef slot) {
    require_state_matches(s, spec);
    auto obs = observables_of(spec, ms);
    if (slot.party < 1 || slot.party > spec.n || slot.slot >= spec.settings_for(slot.party)) {
        throw Error(ErrorCode::ArityMismatch, "slot does not exist in this inequality");
    }
    Mat2& target = obs[slot.party - 1][slot.slot];
    AffineResponse r;
    target = Mat2{};
    r.offset = term_sum(s, spec, obs);
    const Axis axes[] = {Axis::x, Axis::y, Axis::z};
    for (int k = 0; k < 3; ++k) {
        target = pauli2(axes[k]);
        r.gradient[k] = term_sum(s, spec, obs) - r.offset;
    }
    return r;
}

BellObjective::BellObjective(const StateVector& s, const InequalitySpec& spec)
    : state_(s), spec_(spec), slots_(slots(spec)), scratch_(s.dim()) {
    require_state_matches(s, spec);
    for (const auto& term : expand_terms(spec)) {
        Term t{term.sign, {}};
        for (const auto& f : term.factors) {
            const auto it = std::find(slots_.begin(), slots_.end(), f);
            t.slot_indices.push_back(static_cast<std::size_t>(it - slots_.begin()));
        }
        terms_.push_back(std::move(t));
    }
}

double BellObjective::value(const std::vector<Bloch>& dirs) {
    const auto& k = kernels::active();
    double total = 0.0;
    for (const auto& term : terms_) {
        std::copy(state_.amplitudes().begin(), state_.amplitudes().end(), scratch_.begin());
        for (std::size_t idx : term.slot_indices)
            k.apply_1q(scratch_, spec_.n, slots_[idx].party, observable_from_bloch(dirs[idx]));
        total += term.sign * k.dotc(state_.amplitudes(), scratch_).real();
    }
    return total;
}

AffineResponse BellObjective::response(const std::vector<Bloch>& dirs, std::size_t slot_index) {
    const auto& k = kernels::active();
    const unsigned party = slots_[slot_index].party;
    AffineResponse r;
    for (const auto& term : terms_) {
        const bool contains = std::find(term.slot_indices.begin(), term.slot_indices.end(), slot_index) !=
                              term.slot_indices.end();
        std::copy(state_.amplitudes().begin(), state_.amplitudes().end(), scratch_.begin());
        for (std::size_t idx : term.slot_indices)
            if (idx != slot_index) k.apply_1q(scratch_, spec_.n, slots_[idx].party, observable_from_bloch(dirs[idx]));
        if (!contains) {
            r.offset += term.sign * k.dotc(state_.amplitudes(), scratch_).real();
            continue;
        }
        // <psi| O |phi> = sum_ab O_ab R_ab with O = X, Y, Z.
        const Mat2 ov = k.pair_overlap(state_.amplitudes(), scratch_, spec_.n, party);
        constexpr cplx i{0.0, 1.0};
        r.gradient[0] += term.sign * (ov[1] + ov[2]).real();
        r.gradient[1] += term.sign * (-i * ov[1] + i * ov[2]).real();
        r.gradient[2] += term.sign * (ov[0] - ov[3]).real();
    }
    return r;
}

ViolationResult seesaw_from(const StateVector& s, const InequalitySpec& spec, const MeasurementSettings& start,
                            const OptimizerConfig& cfg) {
    cfg.validate();
    require_state_matches(s, spec);
    return to_result(spec, run_seesaw(s, spec, dirs_from(spec, start), cfg), 0);
}

ViolationResult seesaw_maximize(const StateVector& s, const InequalitySpec& spec, const OptimizerConfig& cfg) {
    cfg.validate();
    require_state_matches(s, spec);
    const std::size_t slot_count = slots(spec).size();
    std::vector<RunOutcome> runs(cfg.restarts);
    parallel_for(cfg.restarts, cfg.workers, [&](std::size_t r) {
        Rng rng = Rng::stream(cfg.rng_seed, r);
        std::vector<Bloch> dirs(slot_count);
        for (auto& d : dirs) {
            const double theta = rng.uniform(0.0, std::numbers::pi);
            const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            d = bloch_from_angles({theta, phi});
        }
        runs[r] = run_seesaw(s, spec, std::move(dirs), cfg);
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r].value > runs[best].value) best = r;
    return to_result(spec, std::move(runs[best]), static_cast<unsigned>(best));
}

} // namespace bellset
