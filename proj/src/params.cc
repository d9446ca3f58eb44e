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

#include "intfhe/params.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "intfhe/errors.h"

namespace intfhe {
namespace {

long CeilDiv(long a, long b) { return (a + b - 1) / b; }

int DefaultK(Scheme scheme, int k) {
  switch (scheme) {
    case Scheme::kHE1:
    case Scheme::kHE1N:
      return 1;
    case Scheme::kHE2:
    case Scheme::kHE2N:
    case Scheme::kHE2NCRT:
      return 2;
    case Scheme::kHEk:
    case Scheme::kHEkN:
      if (k < 2) throw InvalidArgument("HEk schemes need k >= 2");
      return k;
  }
  return k;
}

int EtaFor(int lambda, int rho_eff) {
  return static_cast<int>(CeilDiv(static_cast<long>(lambda) * lambda, rho_eff) - lambda);
}

}  // namespace

bool IsNoisy(Scheme scheme) {
  return scheme == Scheme::kHE1N || scheme == Scheme::kHE2N ||
         scheme == Scheme::kHEkN || scheme == Scheme::kHE2NCRT;
}

bool IsVector(Scheme scheme) {
  return scheme != Scheme::kHE1 && scheme != Scheme::kHE1N;
}

std::string SchemeName(Scheme scheme, int k) {
  switch (scheme) {
    case Scheme::kHE1:
      return "HE1";
    case Scheme::kHE1N:
      return "HE1N";
    case Scheme::kHE2:
      return "HE2";
    case Scheme::kHE2N:
      return "HE2N";
    case Scheme::kHEk:
      return k >= 2 ? "HE" + std::to_string(k) : "HEk";
    case Scheme::kHEkN:
      return k >= 2 ? "HE" + std::to_string(k) + "N" : "HEkN";
    case Scheme::kHE2NCRT:
      return "HE2NCRT";
  }
  return "?";
}

SchemeSpec ParseScheme(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "he1") return {Scheme::kHE1, 1};
  if (s == "he1n") return {Scheme::kHE1N, 1};
  if (s == "he2") return {Scheme::kHE2, 2};
  if (s == "he2n") return {Scheme::kHE2N, 2};
  if (s == "hek") return {Scheme::kHEk, 0};
  if (s == "hekn") return {Scheme::kHEkN, 0};
  if (s == "he2ncrt") return {Scheme::kHE2NCRT, 2};
  if (s.size() > 2 && s.rfind("he", 0) == 0) {
    std::string digits = s.substr(2);
    bool noisy = false;
    if (!digits.empty() && digits.back() == 'n') {
      noisy = true;
      digits.pop_back();
    }
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
      const int k = std::stoi(digits);
      if (k >= 3) return {noisy ? Scheme::kHEkN : Scheme::kHEk, k};
    }
  }
  throw Error(ErrorCategory::kParse, "unknown scheme '" + std::string(text) + "'");
}

ParameterSet DeriveParams(Scheme scheme, int d, int n_bits, int rho, int k, int K) {
  if (d < 1 || n_bits < 0 || rho < 1 || K < 1) {
    throw InvalidArgument("DeriveParams: need d >= 1, n_bits >= 0, rho >= 1, K >= 1");
  }
  ParameterSet ps;
  ps.scheme = scheme;
  ps.d = d;
  ps.n_bits = n_bits;
  ps.n = Pow2(n_bits);
  ps.M = Pow2(rho);
  ps.rho = rho;
  ps.k = DefaultK(scheme, k);
  ps.K = scheme == Scheme::kHE2NCRT ? K : 1;
  if (!IsNoisy(scheme)) {
    ps.rho_prime = rho;
    const int base = static_cast<int>(CeilDiv(3L * d * rho, 2));
    ps.lambda = std::max({base, d * (n_bits + rho), 2 * rho});
    ps.eta = EtaFor(ps.lambda, rho);
  } else {
    ps.kappa_bits = d * (n_bits + rho);
    ps.rho_prime = rho + ps.kappa_bits;
    ps.lambda = std::max(d * (n_bits + 2 * ps.kappa_bits), 2 * ps.rho_prime);
    ps.eta = EtaFor(ps.lambda, ps.rho_prime);
  }
  if (ps.eta <= 0) throw InvalidArgument("DeriveParams: derived eta is not positive");
  return ps;
}

ParameterSet DeriveParamsEffective(Scheme scheme, int d, int n_bits, int rho_prime,
                                   int k, int K) {
  if (!IsNoisy(scheme)) return DeriveParams(scheme, d, n_bits, rho_prime, k, K);
  if (d < 1 || n_bits < 0 || rho_prime < 2) {
    throw InvalidArgument("DeriveParamsEffective: need d >= 1, n_bits >= 0, rho' >= 2");
  }
  const int kappa_bits = static_cast<int>(CeilDiv(static_cast<long>(d) * (n_bits + rho_prime), d + 1));
  const int rho = rho_prime - kappa_bits;
  if (rho < 1) {
    throw InvalidArgument("DeriveParamsEffective: rho' too small for this d and n_bits");
  }
  ParameterSet ps;
  ps.scheme = scheme;
  ps.d = d;
  ps.n_bits = n_bits;
  ps.n = Pow2(n_bits);
  ps.M = Pow2(rho);
  ps.rho = rho;
  ps.k = DefaultK(scheme, k);
  ps.K = scheme == Scheme::kHE2NCRT ? K : 1;
  ps.kappa_bits = kappa_bits;
  ps.rho_prime = rho_prime;
  ps.lambda = std::max(d * (n_bits + 2 * kappa_bits), 2 * rho_prime);
  ps.eta = EtaFor(ps.lambda, rho_prime);
  if (ps.eta <= 0) throw InvalidArgument("DeriveParamsEffective: derived eta is not positive");
  return ps;
}

int CeilLog2(const Int& x) {
  if (x <= 1) return 0;
  return static_cast<int>(BitLength(x - 1));
}

std::vector<std::string> Violations(const ParameterSet& ps) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& s) { out.push_back(s); };
  if (ps.d < 1) fail("d must be >= 1");
  if (ps.n < 1) fail("n must be >= 1");
  if (ps.M < 1) fail("M must be >= 1");
  if (ps.rho < 1) fail("rho must be >= 1");
  if (ps.lambda < 2) fail("lambda must be >= 2");
  if (ps.eta < 2) fail("eta must be >= 2");
  if (ps.k < 1) fail("k must be >= 1");
  if (ps.K < 1) fail("K must be >= 1");
  if (!out.empty()) return out;

  const bool vector = IsVector(ps.scheme);
  if (vector && ps.k < 2) fail("vector schemes need k >= 2");
  if (!vector && ps.k != 1) fail("scalar schemes have k = 1");
  if (ps.scheme != Scheme::kHE2NCRT && ps.K != 1) fail("K applies to HE2NCRT only");

  const int lg_n = CeilLog2(ps.n);
  const int lg_m = CeilLog2(ps.M);
  if (IsNoisy(ps.scheme)) {
    if (ps.kappa_bits < 1) fail("noisy schemes need kappa_bits >= 1");
    if (ps.rho_prime != ps.rho + ps.kappa_bits) fail("rho_prime must equal rho + kappa_bits");
    if (ps.kappa_bits < ps.d * (lg_n + lg_m)) fail("2^kappa_bits must exceed (nM)^d");
    if (ps.lambda < ps.d * (lg_n + 2 * ps.kappa_bits)) {
      fail("2^lambda must exceed (n (M + kappa^2))^d");
    }
  } else {
    if (ps.lambda < ps.d * (lg_n + lg_m)) fail("2^lambda must exceed (nM)^d");
  }
  if (!ps.insecure_toy) {
    const int rho_eff = ps.EffectiveRho();
    if (rho_eff < 1) {
      fail("effective entropy must be positive");
    } else {
      if (ps.eta < EtaFor(ps.lambda, rho_eff)) fail("eta below ceil(lambda^2/rho_eff) - lambda");
      if (ps.lambda < 2 * rho_eff) fail("lambda below the brute-force margin 2 rho_eff");
    }
  }
  return out;
}

void Validate(const ParameterSet& params) {
  const auto problems = Violations(params);
  if (problems.empty()) return;
  std::string msg = "invalid parameter set:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw InvalidArgument(msg);
}

Int BoundCapacity(const ParameterSet& params) { return Pow2(params.lambda - 1); }

Int KappaCapacity(const ParameterSet& params) {
  if (!IsNoisy(params.scheme)) return BoundCapacity(params);
  return Pow2(params.kappa_bits - 1);
}

std::vector<Preset> ParsePresets(std::istream& in) {
  std::vector<Preset> presets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 5 || tok.size() > 7) {
      throw Error(ErrorCategory::kParse,
                  "preset line " + std::to_string(line_no) + ": expected 5-7 fields");
    }
    try {
      SchemeSpec spec = ParseScheme(tok[1]);
      const int d = std::stoi(tok[2]);
      const int n_bits = std::stoi(tok[3]);
      const int rho = std::stoi(tok[4]);
      int k = spec.k;
      int K = 1;
      if (tok.size() >= 6) k = std::stoi(tok[5]);
      if (tok.size() >= 7) K = std::stoi(tok[6]);
      presets.push_back({tok[0], DeriveParams(spec.scheme, d, n_bits, rho, k, K)});
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCategory::kParse,
                  "preset line " + std::to_string(line_no) + ": bad integer field");
    }
  }
  return presets;
}

std::string Describe(const ParameterSet& ps) {
  std::ostringstream os;
  os << "scheme=" << SchemeName(ps.scheme, ps.k) << " d=" << ps.d << " n_bits=" << ps.n_bits
     << " rho=" << ps.rho;
  if (IsNoisy(ps.scheme)) os << " rho_prime=" << ps.rho_prime << " kappa_bits=" << ps.kappa_bits;
  os << " lambda=" << ps.lambda << " eta=" << ps.eta;
  if (IsVector(ps.scheme)) os << " k=" << ps.k;
  if (ps.scheme == Scheme::kHE2NCRT) os << " K=" << ps.K;
  if (ps.insecure_toy) os << " insecure_toy=1";
  return os.str();
}

}  // namespace intfhe
