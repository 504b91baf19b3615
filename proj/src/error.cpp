// Copyright 2026 The qalgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qalgo/error.hpp"

namespace qalgo {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::InvalidRegister: return "InvalidRegister";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateTarget: return "DuplicateTarget";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::IncompleteMeasurement: return "IncompleteMeasurement";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InputPrime: return "InputPrime";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NoSolutions: return "NoSolutions";
    case ErrorCode::PromiseViolated: return "PromiseViolated";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ChainViolation: return "ChainViolation";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::CorrectionStuck: return "CorrectionStuck";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

} // namespace qalgo
