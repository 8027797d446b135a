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
#include "bellset/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bellset/campaign.hpp"
#include "bellset/classify.hpp"
#include "bellset/errors.hpp"
#include "bellset/inequalities.hpp"
#include "bellset/json_io.hpp"
#include "bellset/states.hpp"

namespace bellset::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

constexpr std::size_t kFullStates = 25000;
constexpr std::size_t kFullClassStates = 5000;
constexpr double kSweepTolerance = 1e-4;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_double(std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
        throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
    }
    return x;
}

unsigned parse_unsigned(std::string_view s) {
    unsigned x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError, "not an unsigned integer: '" + std::string(s) + "'");
    }
    return x;
}

void expect_fields(const std::vector<std::string_view>& parts, std::size_t count, std::string_view form) {
    if (parts.size() != count) throw Error(ErrorCode::ParseError, "expected " + std::string(form));
}

StateVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return io::state_from_json(j);
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotNormalized:
    case ErrorCode::NonHermitian:
    case ErrorCode::ConstraintViolation:
    case ErrorCode::AmbiguousProfile: return kInvariantBreach;
    default: return kInputError;
    }
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
    f << content;
}

OptimizerConfig optimizer_from(const RunConfig& rc) {
    OptimizerConfig opt;
    opt.restarts = rc.restarts;
    opt.max_sweeps = rc.max_sweeps;
    opt.rng_seed = rc.seed;
    opt.workers = 1;
    opt.validate();
    return opt;
}

/// Largest |violation - closed_form| over rows; also counts non-converged rows.
struct RowSummary {
    double max_deviation = 0.0;
    std::size_t non_converged = 0;
};

RowSummary summarize(const std::vector<SweepRow>& rows) {
    RowSummary s;
    for (const auto& r : rows) {
        s.max_deviation = std::max(s.max_deviation, std::abs(r.max_violation - r.closed_form));
        if (!r.converged) ++s.non_converged;
    }
    return s;
}

int finish(int code, std::size_t non_converged, std::ostream& err) {
    if (code != kOk) return code;
    if (non_converged > 0) {
        err << "warning: optimizer hit max_sweeps without converging on " << non_converged << " run(s)\n";
        return kNonConvergence;
    }
    return kOk;
}

int cmd_classify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    if (rc.state.empty()) throw Error(ErrorCode::ParseError, "classify needs a state descriptor");
    const StateVector s = parse_state_descriptor(rc.state);
    if (s.qubits() != 3) throw Error(ErrorCode::DimensionMismatch, "classify needs a three-qubit state");
    const ProfileRun run = profile_state(s, optimizer_from(rc));
    const Classification c = classify(run.profile, rc.tol_eq, rc.tol_viol);
    out << io::to_json(c).dump(2) << '\n';
    const auto non_converged = std::count_if(run.results.begin(), run.results.end(),
                                             [](const ViolationResult& r) { return !r.converged; });
    return finish(kOk, static_cast<std::size_t>(non_converged), err);
}

int cmd_sweep(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const auto rows = run_ggz_sweep(rc.points, optimizer_from(rc), rc.workers);
    const fs::path path = fs::path(rc.out) / "sweep.csv";
    write_file(path, io::sweep_csv(rows));
    const RowSummary sum = summarize(rows);
    json report = {{"points", rows.size()}, {"file", path.string()}, {"max_abs_deviation", sum.max_deviation}};
    io::require_finite(report);
    out << report.dump(2) << '\n';
    if (sum.max_deviation >= kSweepTolerance) {
        err << "error: sweep deviates from the closed form by " << sum.max_deviation << '\n';
        return kInvariantBreach;
    }
    return finish(kOk, sum.non_converged, err);
}

std::vector<ZeroMask> masks_from(const std::vector<std::string>& names) {
    if (names.size() == 1 && names.front() == "all") return campaign_masks();
    std::vector<ZeroMask> masks;
    for (const auto& part : names) {
        const ZeroMask m = ZeroMask::parse(part);
        if (!is_admissible(m)) throw Error(ErrorCode::InvalidMask, "mask " + m.to_string() + " is not admissible");
        masks.push_back(m);
    }
    return masks;
}

int cmd_campaign(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const std::size_t main_states = rc.scale_full ? kFullStates : rc.states;
    const std::size_t class_states = rc.scale_full ? kFullClassStates : rc.class_states;
    const OptimizerConfig opt = optimizer_from(rc);
    const fs::path root(rc.out);

    json campaigns = json::array();
    json summary = json::array();
    std::size_t non_converged = 0;
    std::size_t total_survivors = 0;
    for (const ZeroMask& mask : masks_from(rc.masks)) {
        const bool main = mask.bits.none();
        CampaignConfig cfg;
        cfg.n_states = main ? main_states : class_states;
        cfg.seed = rc.seed;
        cfg.mask = mask;
        cfg.optimizer = opt;
        cfg.viol_tol = rc.tol_viol;
        cfg.workers = rc.workers;
        const FilterCampaign fc = run_filter_campaign(cfg);

        const fs::path dir = main ? root : root / ("class_" + mask.to_string());
        for (std::size_t k = 0; k < fc.stages.size(); ++k) {
            write_file(dir / ("filter_stage_" + std::to_string(k + 1) + ".csv"), io::filter_stage_csv(fc.stages[k]));
            for (const auto& r : fc.stages[k].records)
                if (!r.converged) ++non_converged;
        }
        json entry = io::manifest_entry(fc);
        entry["directory"] = dir.lexically_relative(root).generic_string();
        campaigns.push_back(std::move(entry));
        summary.push_back({{"mask", mask.to_string()},
                           {"n_states", cfg.n_states},
                           {"stage1_survivors", fc.stages.front().survivors},
                           {"final_survivors", fc.final_survivors()}});
        total_survivors += fc.final_survivors();
    }
    json manifest = {{"command", "campaign"}, {"campaigns", campaigns}};
    write_file(root / "manifest.json", manifest.dump(2) + "\n");
    out << json({{"manifest", (root / "manifest.json").string()}, {"campaigns", summary}}).dump(2) << '\n';
    if (total_survivors > 0) err << "note: " << total_survivors << " state(s) violated none of the six inequalities\n";
    return finish(kOk, non_converged, err);
}

int cmd_nqubit(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const auto rows = run_nqubit_ggz_check(rc.qubits, rc.alphas, optimizer_from(rc), rc.workers);
    const fs::path path = fs::path(rc.out) / ("nqubit_n" + std::to_string(rc.qubits) + ".csv");
    write_file(path, io::sweep_csv(rows));
    const RowSummary sum = summarize(rows);
    json report = {{"n", rc.qubits},
                   {"spec", nqubit_family_member(rc.qubits).id()},
                   {"family_size", enumerate_specs(rc.qubits).size()},
                   {"file", path.string()},
                   {"max_abs_deviation", sum.max_deviation}};
    io::require_finite(report);
    out << report.dump(2) << '\n';
    if (sum.max_deviation >= kSweepTolerance) {
        err << "error: n-qubit check deviates from the closed form by " << sum.max_deviation << '\n';
        return kInvariantBreach;
    }
    return finish(kOk, sum.non_converged, err);
}

int cmd_bound_check(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const std::array<unsigned, 3> ns{3, 4, 5};
    const BoundCheckReport r = run_bound_check(rc.samples, rc.seed, ns);
    const double bound = 2.0 * std::numbers::sqrt2;
    json report = {{"samples", rc.samples},
                   {"seed", rc.seed},
                   {"qubit_counts", ns},
                   {"operators_checked", r.operators_checked},
                   {"max_identity_deviation", r.max_identity_deviation},
                   {"max_spectral_radius", r.max_spectral_radius},
                   {"quantum_bound", bound}};
    io::require_finite(report);
    out << report.dump(2) << '\n';
    if (r.max_identity_deviation >= 1e-10 || r.max_spectral_radius > bound + kTolerances.quantum_bound) {
        err << "error: operator bound check failed\n";
        return kInvariantBreach;
    }
    return kOk;
}

} // namespace

StateVector parse_state_descriptor(std::string_view text) {
    const auto parts = split(text, ':');
    const std::string_view kind = parts.front();
    if (kind == "file") {
        if (parts.size() < 2) throw Error(ErrorCode::ParseError, "expected file:{path}");
        return read_state_file(std::string(text.substr(5)));
    }
    if (kind == "ggz") {
        expect_fields(parts, 3, "ggz:{n}:{alpha}");
        return ggz(parse_unsigned(parts[1]), parse_double(parts[2]));
    }
    if (kind == "bisep") {
        expect_fields(parts, 3, "bisep:{lone}:{a}");
        return biseparable({parse_unsigned(parts[1])}, parse_double(parts[2]));
    }
    if (kind == "canon") {
        expect_fields(parts, 7, "canon:{l0}:{l1}:{l2}:{l3}:{l4}:{phi}");
        CanonicalParams p;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            p.lambda[i] = parse_double(parts[i + 1]);
            norm2 += p.lambda[i] * p.lambda[i];
        }
        p.phi = parse_double(parts[6]);
        if (std::abs(norm2 - 1.0) > kTolerances.normalization) {
            throw Error(ErrorCode::NotNormalized, "sum lambda_i^2 = " + io::format_number(norm2));
        }
        try {
            return canonical_state(p, CanonicalCheck::form_only);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    }
    throw Error(ErrorCode::ParseError, "unknown state descriptor '" + std::string(text) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Violation profiles and entanglement classification for three-qubit states", "bellset"};
    app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    app.add_option("command", rc.command, "classify | sweep | campaign | nqubit | bound-check")
        ->required()
        ->check(CLI::IsMember({"classify", "sweep", "campaign", "nqubit", "bound-check"}));
    app.add_option("state", rc.state, "classify: ggz:{n}:{alpha} | bisep:{lone}:{a} | canon:... | file:{path}");
    app.add_option("--seed", rc.seed, "base seed")->capture_default_str();
    app.add_option("--states", rc.states, "campaign: states in the unrestricted run")->capture_default_str();
    app.add_option("--class-states", rc.class_states, "campaign: states per degenerate class")->capture_default_str();
    app.add_option("--restarts", rc.restarts, "optimizer restarts")->capture_default_str();
    app.add_option("--max-sweeps", rc.max_sweeps, "optimizer sweeps per restart")->capture_default_str();
    app.add_option("--points", rc.points, "sweep: number of alpha^2 points")->capture_default_str();
    app.add_option("--out", rc.out, "output directory")->capture_default_str();
    app.add_flag("--scale-full", rc.scale_full, "campaign: 25000 states plus 5000 per class");
    app.add_option("--tol-viol", rc.tol_viol, "violation threshold above 2")->capture_default_str();
    app.add_option("--tol-eq", rc.tol_eq, "equality tolerance for biseparable pairs")->capture_default_str();
    app.add_option("--workers", rc.workers, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--n", rc.qubits, "nqubit: number of qubits")->capture_default_str();
    app.add_option("--alphas", rc.alphas, "nqubit: alpha values")->delimiter(',');
    app.add_option("--samples", rc.samples, "bound-check: random settings per operator")->capture_default_str();
    app.add_option("--masks", rc.masks, "campaign: 'all' or comma-separated zero masks")
        ->delimiter(',')
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (rc.command == "classify") return cmd_classify(rc, out, err);
        if (rc.command == "sweep") return cmd_sweep(rc, out, err);
        if (rc.command == "campaign") return cmd_campaign(rc, out, err);
        if (rc.command == "nqubit") return cmd_nqubit(rc, out, err);
        return cmd_bound_check(rc, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvariantBreach;
    }
}

} // namespace bellset::cli
