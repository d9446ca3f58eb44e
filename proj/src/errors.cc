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

#include "intfhe/errors.h"

namespace intfhe {

const char* CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidArgument:
      return "invalid-argument";
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kCapacity:
      return "capacity";
    case ErrorCategory::kOverflowRisk:
      return "overflow-risk";
    case ErrorCategory::kVerificationMismatch:
      return "verification-mismatch";
    case ErrorCategory::kAttackBudget:
      return "attack-budget";
    case ErrorCategory::kKeyGeneration:
      return "key-generation";
    case ErrorCategory::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace intfhe
