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

#include <stdexcept>
#include <string>
#include <string_view>

namespace bellset {

enum class ErrorCode {
    AngleOutOfRange,
    DimensionMismatch,
    InvalidQubitSet,
    NotNormalized,
    NonHermitian,
    AlphaOutOfRange,
    ConstraintViolation,
    InvalidMask,
    InvalidSpec,
    ArityMismatch,
    ResolutionTooCoarse,
    AmbiguousProfile,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidQubitSet: return "InvalidQubitSet";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::InvalidMask: return "InvalidMask";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorCode::AmbiguousProfile: return "AmbiguousProfile";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace bellset
