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

#ifndef INTFHE_PIPELINE_H_
#define INTFHE_PIPELINE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "intfhe/numeric.h"
#include "intfhe/params.h"

namespace intfhe {

struct PipelineJob {
  ParameterSet params;
  int count = 24000;  // total inputs; lines of d
  int d = 2;
  std::uint64_t seed = 1;
  int workers = 1;
  int repetitions = 5;
};

// Medians over the repetitions, in microseconds.
struct StageTimings {
  double init_us = 0;
  double encrypt_us = 0;  // per encryption
  double map_us = 0;
  double reduce_us = 0;
  double decrypt_us = 0;
  double per_mult_us = 0;
  double per_add_us = 0;
};

struct PipelineReport {
  std::string scheme;
  int d = 0;
  int count = 0;
  int workers = 0;
  int lambda = 0;
  int eta = 0;
  Int result;
  Int expected;
  bool verified = false;
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  std::vector<int> lines_per_worker;
  StageTimings timings;

  // Timings vary run to run; leave them out for reproducible reports.
  std::string Format(bool with_timings = true) const;
  std::string ToJsonLine(bool with_timings = true) const;
};

// Contiguous equal shares; sizes differ by at most one.
std::vector<int> SplitLines(int lines, int workers);

// Plaintext inputs for a job, reproducible from the seed.
std::vector<Int> PipelineInputs(const PipelineJob& job);

// Sum over lines of the product of the d values on the line.
Int PlainInnerProduct(std::span<const Int> values, int d);

PipelineReport RunPipeline(const PipelineJob& job);

struct BenchClaim {
  std::string claim;
  double ratio = 0;  // slower / faster
  bool holds = false;
};

// Ordinal per-op claims over reports with matching d, count and workers.
std::vector<BenchClaim> RelativeBench(std::span<const PipelineReport> reports);

}  // namespace intfhe

#endif  // INTFHE_PIPELINE_H_
