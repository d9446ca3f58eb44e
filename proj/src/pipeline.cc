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

#include "intfhe/pipeline.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "intfhe/errors.h"
#include "intfhe/random.h"
#include "intfhe/scalar.h"
#include "intfhe/vector.h"

namespace intfhe {
namespace {

using Clock = std::chrono::steady_clock;

double Micros(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::micro>(b - a).count();
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct ScalarBackend {
  using Ct = ScalarCiphertext;
  ScalarKeys keys;

  ScalarBackend(const ParameterSet& ps, RandomSource& rng) : keys(ScalarKeygen(ps, rng)) {}
  Ct Encrypt(const Int& m, RandomSource& rng) const { return intfhe::Encrypt(m, keys.sk, keys.pp, rng); }
  Ct Mult(const Ct& a, const Ct& b) const { return intfhe::Mult(a, b, keys.pp); }
  Ct Add(const Ct& a, const Ct& b) const { return intfhe::Add(a, b, keys.pp); }
  Int Decrypt(const Ct& c) const { return intfhe::Decrypt(c, keys.sk); }
  Int FreshBound() const { return intfhe::FreshBound(keys.sk); }
  Int Capacity() const { return keys.pp.capacity; }
};

struct VectorBackend {
  using Ct = VectorCiphertext;
  VectorKeys keys;

  VectorBackend(const ParameterSet& ps, RandomSource& rng) : keys(BuildKeys(ps, rng)) {}
  Ct Encrypt(const Int& m, RandomSource& rng) const { return intfhe::Encrypt(m, keys.sk, keys.pp, rng); }
  Ct Mult(const Ct& a, const Ct& b) const { return intfhe::Mult(a, b, keys.pp); }
  Ct Add(const Ct& a, const Ct& b) const { return intfhe::Add(a, b, keys.pp); }
  Int Decrypt(const Ct& c) const { return intfhe::Decrypt(c, keys.sk); }
  Int FreshBound() const { return intfhe::FreshBound(keys.sk); }
  Int Capacity() const { return keys.pp.capacity; }
};

void ParallelFor(int workers, const std::function<void(int)>& body) {
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

template <typename Backend>
PipelineReport Run(const PipelineJob& job) {
  const ParameterSet& ps = job.params;
  const int lines = job.count / job.d;
  PipelineReport report;
  report.scheme = SchemeName(ps.scheme, ps.k);
  report.d = job.d;
  report.count = job.count;
  report.workers = job.workers;
  report.lambda = ps.lambda;
  report.eta = ps.eta;
  report.lines_per_worker = SplitLines(lines, job.workers);
  report.mults = static_cast<std::uint64_t>(lines) * (job.d - 1);
  report.adds = static_cast<std::uint64_t>(lines) - 1;

  const std::vector<Int> values = PipelineInputs(job);
  report.expected = PlainInnerProduct(values, job.d);

  SeededRandom key_rng(job.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto t0 = Clock::now();
  const Backend backend(ps, key_rng);
  report.timings.init_us = Micros(t0, Clock::now());

  const Int bound = Int(lines) * Pow(backend.FreshBound(), job.d);
  if (bound >= backend.Capacity()) {
    throw Error(ErrorCategory::kCapacity, "inner product bound " + ToString(bound) +
                                              " exceeds the capacity for these parameters");
  }
  if (IsNoisy(ps.scheme) && Int(lines) * Pow(ps.M, job.d) >= KappaCapacity(ps)) {
    throw Error(ErrorCategory::kCapacity, "inner product exceeds the kappa capacity");
  }

  std::vector<int> first_line(job.workers + 1, 0);
  for (int w = 0; w < job.workers; ++w) first_line[w + 1] = first_line[w] + report.lines_per_worker[w];

  std::vector<double> enc, map, reduce, dec;
  for (int rep = 0; rep < job.repetitions; ++rep) {
    SeededRandom enc_rng(job.seed + 1000003ULL * (rep + 1));
    using Ct = typename Backend::Ct;
    std::vector<Ct> cts;
    cts.reserve(values.size());
    auto a = Clock::now();
    for (const auto& m : values) cts.push_back(backend.Encrypt(m, enc_rng));
    auto b = Clock::now();
    enc.push_back(Micros(a, b) / static_cast<double>(values.size()));

    std::vector<Ct> products(lines);
    a = Clock::now();
    ParallelFor(job.workers, [&](int w) {
      for (int l = first_line[w]; l < first_line[w + 1]; ++l) {
        Ct acc = cts[static_cast<std::size_t>(l) * job.d];
        for (int j = 1; j < job.d; ++j) acc = backend.Mult(acc, cts[static_cast<std::size_t>(l) * job.d + j]);
        products[l] = std::move(acc);
      }
    });
    b = Clock::now();
    map.push_back(Micros(a, b));

    // Per-worker partial sums, then a pairwise tree over the partials.
    std::vector<std::optional<Ct>> partial(job.workers);
    a = Clock::now();
    ParallelFor(job.workers, [&](int w) {
      for (int l = first_line[w]; l < first_line[w + 1]; ++l) {
        partial[w] = partial[w] ? backend.Add(*partial[w], products[l]) : products[l];
      }
    });
    std::vector<Ct> level;
    for (auto& p : partial)
      if (p) level.push_back(std::move(*p));
    while (level.size() > 1) {
      std::vector<Ct> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(backend.Add(level[i], level[i + 1]));
      if (level.size() % 2) next.push_back(std::move(level.back()));
      level = std::move(next);
    }
    b = Clock::now();
    reduce.push_back(Micros(a, b));

    a = Clock::now();
    const Int result = backend.Decrypt(level.front());
    b = Clock::now();
    dec.push_back(Micros(a, b));
    if (rep == 0) report.result = result;
    if (result != report.expected || result != report.result) {
      throw Error(ErrorCategory::kVerificationMismatch,
                  "decrypted " + ToString(result) + " but the plaintext shadow is " +
                      ToString(report.expected));
    }
  }
  report.verified = true;
  report.timings.encrypt_us = Median(enc);
  report.timings.map_us = Median(map);
  report.timings.reduce_us = Median(reduce);
  report.timings.decrypt_us = Median(dec);
  if (report.mults) report.timings.per_mult_us = report.timings.map_us / static_cast<double>(report.mults);
  if (report.adds) report.timings.per_add_us = report.timings.reduce_us / static_cast<double>(report.adds);
  return report;
}

}  // namespace

std::vector<int> SplitLines(int lines, int workers) {
  if (workers < 1) throw InvalidArgument("need at least one worker");
  std::vector<int> out(workers, lines / workers);
  for (int w = 0; w < lines % workers; ++w) ++out[w];
  return out;
}

std::vector<Int> PipelineInputs(const PipelineJob& job) {
  SeededRandom rng(job.seed);
  std::vector<Int> values;
  values.reserve(job.count);
  for (int i = 0; i < job.count; ++i) values.push_back(rng.Below(job.params.M));
  return values;
}

Int PlainInnerProduct(std::span<const Int> values, int d) {
  Int sum = 0;
  for (std::size_t l = 0; l + d <= values.size(); l += d) {
    Int prod = 1;
    for (int j = 0; j < d; ++j) prod *= values[l + j];
    sum += prod;
  }
  return sum;
}

PipelineReport RunPipeline(const PipelineJob& job) {
  if (job.d < 1 || job.count < job.d || job.count % job.d != 0) {
    throw InvalidArgument("input count must be a positive multiple of d");
  }
  if (job.repetitions < 1) throw InvalidArgument("need at least one repetition");
  if (job.workers < 1) throw InvalidArgument("need at least one worker");
  switch (job.params.scheme) {
    case Scheme::kHE1:
    case Scheme::kHE1N:
      return Run<ScalarBackend>(job);
    case Scheme::kHE2:
    case Scheme::kHE2N:
    case Scheme::kHEk:
    case Scheme::kHEkN:
      return Run<VectorBackend>(job);
    case Scheme::kHE2NCRT:
      break;
  }
  throw InvalidArgument("the pipeline runs HE1, HE1N, HE2, HE2N and HEk(N)");
}

std::string PipelineReport::Format(bool with_timings) const {
  std::ostringstream os;
  os << "scheme " << scheme << "\n"
     << "d " << d << "\n"
     << "count " << count << "\n"
     << "workers " << workers << "\n"
     << "lambda " << lambda << "\n"
     << "eta " << eta << "\n"
     << "result " << result << "\n"
     << "expected " << expected << "\n"
     << "verified " << (verified ? "yes" : "no") << "\n";
  if (!with_timings) return os.str();
  os << "init_us " << timings.init_us << "\n"
     << "encrypt_us_each " << timings.encrypt_us << "\n"
     << "map_us " << timings.map_us << "\n"
     << "reduce_us " << timings.reduce_us << "\n"
     << "decrypt_us " << timings.decrypt_us << "\n"
     << "mult_us_each " << timings.per_mult_us << "\n"
     << "add_us_each " << timings.per_add_us << "\n";
  return os.str();
}

std::string PipelineReport::ToJsonLine(bool with_timings) const {
  nlohmann::json j;
  j["scheme"] = scheme;
  j["d"] = d;
  j["count"] = count;
  j["workers"] = workers;
  j["lambda"] = lambda;
  j["eta"] = eta;
  j["result"] = ToString(result);
  j["verified"] = verified;
  j["lines_per_worker"] = lines_per_worker;
  if (with_timings)
    j["timings_us"] = {{"init", timings.init_us},         {"encrypt_each", timings.encrypt_us},
                     {"map", timings.map_us},           {"reduce", timings.reduce_us},
                     {"decrypt", timings.decrypt_us},   {"mult_each", timings.per_mult_us},
                     {"add_each", timings.per_add_us}};
  return j.dump();
}

std::vector<BenchClaim> RelativeBench(std::span<const PipelineReport> reports) {
  std::vector<BenchClaim> claims;
  if (reports.size() < 2) return claims;
  auto find = [&](const std::string& scheme, const PipelineReport& like) -> const PipelineReport* {
    for (const auto& r : reports)
      if (r.scheme == scheme && r.d == like.d && r.count == like.count && r.workers == like.workers)
        return &r;
    return nullptr;
  };
  auto ratio = [](double slow, double fast) { return fast > 0 ? slow / fast : 0.0; };
  for (const auto& r : reports) {
    const std::string tag =
        " (d=" + std::to_string(r.d) + ", workers=" + std::to_string(r.workers) + ")";
    if (r.scheme == "HE1") {
      if (const auto* v = find("HE2", r)) {
        const double x = ratio(v->timings.per_mult_us, r.timings.per_mult_us);
        claims.push_back({"per-Mult HE2 > HE1" + tag, x, x > 1.0});
      }
      if (const auto* n = find("HE1N", r)) {
        const double x = ratio(n->timings.encrypt_us, r.timings.encrypt_us);
        claims.push_back({"Enc HE1N >= HE1" + tag, x, x >= 1.0});
      }
    } else if (r.scheme == "HE1N") {
      if (const auto* v = find("HE2N", r)) {
        const double x = ratio(v->timings.per_mult_us, r.timings.per_mult_us);
        claims.push_back({"per-Mult HE2N > HE1N" + tag, x, x > 1.0});
      }
    }
  }
  return claims;
}

}  // namespace intfhe
