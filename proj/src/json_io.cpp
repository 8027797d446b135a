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
#include "bellset/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "bellset/errors.hpp"

namespace bellset::io {

std::string format_number(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::ConstraintViolation, "non-finite number in output");
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void require_finite(const json& j) {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw Error(ErrorCode::ConstraintViolation, "non-finite number in output");
    }
    if (j.is_structured())
        for (const auto& child : j) require_finite(child);
}

json state_to_json(const StateVector& s) {
    json amps = json::array();
    for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
    return {{"n", s.qubits()}, {"amplitudes", amps}};
}

StateVector state_from_json(const json& j) {
    try {
        const unsigned n = j.at("n").get<unsigned>();
        std::vector<cplx> amps;
        for (const auto& pair : j.at("amplitudes")) {
            if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "amplitude must be [re, im]");
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return StateVector(n, std::move(amps));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

json to_json(const Classification& c) {
    json profile = json::object();
    for (std::size_t i = 0; i < c.profile.values.size(); ++i)
        profile["ineq" + std::to_string(i + 1)] = c.profile.values[i];
    json out = {{"label", std::string(to_string(c.label))},
                {"profile", profile},
                {"tolerances", {{"eq", c.eq_tol}, {"viol", c.viol_tol}}}};
    if (c.lone) out["lone"] = *c.lone;
    if (c.label == Label::genuine) out["note"] = "conjectured criterion: every genuinely entangled pure state violates the set";
    require_finite(out);
    return out;
}

json to_json(const CanonicalParams& p) {
    return {{"lambda", p.lambda}, {"phi", p.phi}};
}

json manifest_entry(const FilterCampaign& campaign) {
    const auto& cfg = campaign.config;
    json stages = json::array();
    for (const auto& st : campaign.stages) {
        std::size_t non_converged = 0;
        for (const auto& r : st.records) non_converged += r.converged ? 0 : 1;
        stages.push_back({{"stage", st.stage},
                          {"tested", st.tested},
                          {"survivors", st.survivors},
                          {"non_converged", non_converged},
                          {"survivor_seeds", st.survivor_seeds}});
    }
    json survivors = json::array();
    for (const auto& s : campaign.survivors) {
        survivors.push_back({{"state_index", s.state_index},
                             {"seed", s.seed},
                             {"params", to_json(s.params)},
                             {"stage_values", s.stage_values}});
    }
    json out = {{"mask", cfg.mask.to_string()},
                {"n_states", cfg.n_states},
                {"seed", cfg.seed},
                {"seeding", "state i uses sample_canonical(seed + i, mask)"},
                {"optimizer",
                 {{"restarts", cfg.optimizer.restarts},
                  {"max_sweeps", cfg.optimizer.max_sweeps},
                  {"convergence_eps", cfg.optimizer.convergence_eps},
                  {"rng_seed", cfg.optimizer.rng_seed}}},
                {"viol_tol", cfg.viol_tol},
                {"stages", stages},
                {"final_survivors", campaign.final_survivors()},
                {"survivors", survivors}};
    require_finite(out);
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "alpha_sq,entropy,violation,closed_form\n";
    for (const auto& r : rows) {
        out << format_number(r.alpha_sq) << ',' << format_number(r.entropy) << ',' << format_number(r.max_violation)
            << ',' << format_number(r.closed_form) << '\n';
    }
    return out.str();
}

std::string filter_stage_csv(const FilterReport& report) {
    std::ostringstream out;
    out << "state_index,seed,value,violated\n";
    for (const auto& r : report.records) {
        out << r.state_index << ',' << r.seed << ',' << format_number(r.value) << ',' << (r.violated ? 1 : 0)
            << '\n';
    }
    return out.str();
}

} // namespace bellset::io
