// Copyright 2026 The intfhe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTFHE_ERRORS_H_
#define INTFHE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace intfhe {

// Coarse failure classes. The CLI maps each one to a distinct exit code.
enum class ErrorCategory {
  kInvalidArgument,
  kParse,
  kCapacity,
  kOverflowRisk,
  kVerificationMismatch,
  kAttackBudget,
  kKeyGeneration,
  kIo,
};

const char* CategoryName(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCategory::kInvalidArgument, what) {}
};

// Raised when a running plaintext bound reaches the decryptability limit.
class OverflowRisk : public Error {
 public:
  explicit OverflowRisk(const std::string& what)
      : Error(ErrorCategory::kOverflowRisk, what) {}
};

class KeyGenerationFailure : public Error {
 public:
  explicit KeyGenerationFailure(const std::string& what)
      : Error(ErrorCategory::kKeyGeneration, what) {}
};

}  // namespace intfhe

#endif  // INTFHE_ERRORS_H_
