// Copyright 2026 The metaframe Authors
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

#include "metaframe/error.hpp"

namespace metaframe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotRightRegular: return "NotRightRegular";
    case ErrorCode::SingularSchur: return "SingularSchur";
    case ErrorCode::TauDegenerate: return "TauDegenerate";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::InterpolationUnavailable: return "InterpolationUnavailable";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::OffGridShift: return "OffGridShift";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::ZeroWindow: return "ZeroWindow";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotTotallyDecomposable: return "NotTotallyDecomposable";
    case ErrorCode::WeightConditionFailed: return "WeightConditionFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace metaframe
