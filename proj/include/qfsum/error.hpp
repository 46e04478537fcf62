// Copyright 2026 The QFSum Authors.
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

#ifndef QFSUM_ERROR_HPP_
#define QFSUM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qfsum {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kParse,
  kMissingAnnotation,
  kConfig,
  kNumeric,
  kInternal,
};

/// Exception carrying a coarse error class; the C API maps the class to a
/// status code and the message to the last-error string.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qfsum

#endif  // QFSUM_ERROR_HPP_
