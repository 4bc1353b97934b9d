// Copyright 2026 The Shatter Authors
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

#ifndef SHATTER_ERRORS_HPP
#define SHATTER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace shatter {

enum class ErrorCode {
  kParse,
  kEmptyFamily,
  kInvalidGroundSubset,
  kElementOutOfRange,
  kGroundSetTooLarge,
  kParameterOutOfRange,
  kLayerViolation,
  kNotExtremal,
  kDisconnected,
  kInvalidTree,
  kPreconditionViolated,
  kNotASubset,
  kZeroPolynomial,
  kExponentOverflow,
  kVcMismatch,
  kDuplicateEValue,
  // Consistency failures: a structural check on valid input came out false.
  kNonUniqueH,
  kDisconnectedLevelGraph,
  kFalsified,
};

std::string_view error_code_name(ErrorCode code);

// True for the codes that signal a failed internal consistency check rather
// than a problem with the caller's input.
bool is_consistency_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace shatter

#endif  // SHATTER_ERRORS_HPP
