// Copyright 2026 The expoly Authors
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

#ifndef EXPOLY_ERROR_H_
#define EXPOLY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace expoly {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kFieldTooLarge,
  kFieldMismatch,
  kDivisionByZero,
  kZeroElement,
  kCapExceeded,
  kMemoryCap,
  kOverflow,
  kIndexOutOfRange,
  kBadDelta,
  kBadCounts,
  kHypothesisFailed,
  kOrderMismatch,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception type; callers that need to
// branch (the CLI maps codes to exit statuses) inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Resource-limit failures, as opposed to malformed input.
inline bool is_limit_error(ErrorCode code) {
  return code == ErrorCode::kCapExceeded || code == ErrorCode::kMemoryCap ||
         code == ErrorCode::kOverflow || code == ErrorCode::kHypothesisFailed;
}

}  // namespace expoly

#endif  // EXPOLY_ERROR_H_
