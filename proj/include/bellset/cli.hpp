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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bellset/qcore.hpp"

namespace bellset::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInvariantBreach = 3,
    kNonConvergence = 4,
};

/// Parsed command line / config file. Defaults mirror the library defaults.
struct RunConfig {
    std::string command; // classify | sweep | campaign | nqubit | bound-check
    std::string state;   // classify only
    std::uint64_t seed = 42;
    std::size_t states = 2000;
    std::size_t class_states = 500;
    unsigned restarts = 20;
    unsigned max_sweeps = 500;
    std::size_t points = 99;
    std::string out = ".";
    bool scale_full = false;
    double tol_viol = 1e-7;
    double tol_eq = 1e-5;
    unsigned workers = 1;
    unsigned qubits = 5;
    std::vector<double> alphas{0.31622776601683794, 0.5477225575051661, 0.7071067811865476};
    std::size_t samples = 500;
    std::vector<std::string> masks{"all"};
};

/// "ggz:{n}:{alpha}", "bisep:{lone}:{a}", "canon:{l0}:{l1}:{l2}:{l3}:{l4}:{phi}"
/// or "file:{path}" (JSON state). Throws ParseError for malformed text and
/// NotNormalized when the amplitudes are not unit-norm.
StateVector parse_state_descriptor(std::string_view text);

/// Entry point shared by the executable and the tests. Machine-readable
/// results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bellset::cli
