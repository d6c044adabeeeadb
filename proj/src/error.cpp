// Copyright 2026 The gfwigner Authors
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

#include "gfwigner/error.hpp"

namespace gfw {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::SingularBasis: return "SingularBasis";
        case ErrorCode::ZeroSeed: return "ZeroSeed";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::NonCommutingGenerators: return "NonCommutingGenerators";
        case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
        case ErrorCode::InconsistentStabilizer: return "InconsistentStabilizer";
        case ErrorCode::DegenerateConstraints: return "DegenerateConstraints";
        case ErrorCode::AmbiguousInference: return "AmbiguousInference";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace gfw
