// Copyright 2026 The Quartic Authors.
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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartic/oracle.hpp"

namespace quartic {

enum class CensusFamily {
  kAccordionPair,       // A[n,k1] vs A[n,k2]
  kCirculantAccordion,  // Ci[2n,{a,b}] vs A[n,k]
  kCirculantTorus,      // Ci[n',{a1,a2}] vs C_{n1} x C_{n2}
};

std::string_view to_string(CensusFamily family);

struct CensusVerdict {
  CensusFamily family = CensusFamily::kAccordionPair;
  // (n, k1, k2), (n, a, b, k) or (n', a1, a2, n1, n2).
  std::vector<std::int64_t> params;
  bool decider_result = false;
  bool oracle_result = false;
  bool agree = false;
  // Set iff decider_result.
  std::optional<bool> witness_verified;
  std::chrono::nanoseconds elapsed{0};
  std::string note;

  std::string descriptor() const;
};

struct CensusOptions {
  int max_n = 14;            // accordion pairs for 3 <= n <= max_n
  int circulant_max_n = 10;  // capped again by max_n
  int torus_min_order = 9;
  int torus_max_order = 36;
  unsigned jobs = 0;  // 0: hardware concurrency
  OracleOptions oracle;
};

struct CensusReport {
  std::vector<CensusVerdict> rows;  // sorted by family, then params

  bool all_agree() const;
  bool all_witnesses_verified() const;
  bool passed() const { return all_agree() && all_witnesses_verified(); }
  std::vector<const CensusVerdict*> failures() const;
};

// Throws InvalidParameter when max_n < 3.
CensusReport run_census(const CensusOptions& options);

std::string to_json(const CensusReport& report);

}  // namespace quartic
