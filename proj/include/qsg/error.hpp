// Copyright 2026 The qsg-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsg {

enum class ErrorCode {
    InvalidArgument,
    Domain,
    Singularity,
    NoDoubleWell,
    GridTooNarrow,
    NoInteraction,
    ApproximationInvalid,
    DecoherenceBudgetExceeded,
    Config,
    Usage,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Domain: return "DomainError";
        case ErrorCode::Singularity: return "Singularity";
        case ErrorCode::NoDoubleWell: return "NoDoubleWell";
        case ErrorCode::GridTooNarrow: return "GridTooNarrow";
        case ErrorCode::NoInteraction: return "NoInteraction";
        case ErrorCode::ApproximationInvalid: return "ApproximationInvalid";
        case ErrorCode::DecoherenceBudgetExceeded: return "DecoherenceBudgetExceeded";
        case ErrorCode::Config: return "ConfigError";
        case ErrorCode::Usage: return "UsageError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qsg
