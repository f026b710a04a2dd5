// Copyright 2026 The antimagic Authors
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

namespace antimagic {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kOutOfRange,
  kDuplicateEdge,
  kNotRegular,
  kDegreeTooSmall,
  kIncompleteLabeling,
  kNotBijective,
  kBudgetExhausted,
  kRepairFailed,
  kGenerationFailed,
  kInstanceTooLarge,
  kInternal,
};

/// Base exception for all library errors. The code is what the C API
/// reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antimagic
