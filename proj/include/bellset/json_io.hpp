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

#include <string>
#include <vector>

#include <json.hpp>

#include "bellset/campaign.hpp"
#include "bellset/classify.hpp"
#include "bellset/qcore.hpp"

/// Serialization of states, verdicts and campaign outputs. Every writer
/// refuses non-finite numbers (ConstraintViolation).
namespace bellset::io {

using nlohmann::json;

/// {"n": n, "amplitudes": [[re, im], ...]}
json state_to_json(const StateVector& s);
/// Throws ParseError for malformed documents and NotNormalized /
/// DimensionMismatch from the StateVector constructor.
StateVector state_from_json(const json& j);

json to_json(const Classification& c);
json to_json(const CanonicalParams& p);

/// Campaign manifest: configuration, seeding scheme, per-stage counts and
/// persisted stage-1 survivors.
json manifest_entry(const FilterCampaign& campaign);

/// alpha_sq,entropy,violation,closed_form
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// state_index,seed,value,violated
std::string filter_stage_csv(const FilterReport& report);

/// Shortest round-trip decimal; throws ConstraintViolation on NaN or infinity.
std::string format_number(double x);

/// Throws ConstraintViolation if any number inside j is non-finite.
void require_finite(const json& j);

} // namespace bellset::io
