// Copyright 2026 The qgraph Authors
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

#include "qgraph/errors.hpp"

namespace qgraph {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kSingularPivot: return "SingularPivot";
    case ErrorCode::kNotEquilateral: return "NotEquilateral";
    case ErrorCode::kKDependentCoupling: return "KDependentCoupling";
    case ErrorCode::kNotExact: return "NotExact";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kPlanConflict: return "PlanConflict";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace qgraph
