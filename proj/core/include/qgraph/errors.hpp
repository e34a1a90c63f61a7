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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgraph {

enum class ErrorCode {
  kParse,
  kInvalidGraph,
  kSingularPivot,
  kNotEquilateral,
  kKDependentCoupling,
  kNotExact,
  kNoConvergence,
  kCapExceeded,
  kPreconditionViolated,
  kPlanConflict,
  kInternal,
};

/// Stable name used in CLI diagnostics and record output, e.g. "NotEquilateral".
std::string_view error_name(ErrorCode code);

/// Single exception type for the library; the code selects the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace qgraph
