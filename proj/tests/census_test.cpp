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

#include "quartic/census.hpp"

#include <doctest.h>

#include "quartic/error.hpp"

namespace quartic {
namespace {

CensusOptions small(int max_n) {
  CensusOptions options;
  options.max_n = max_n;
  options.circulant_max_n = max_n;
  options.torus_min_order = 9;
  options.torus_max_order = 0;
  options.jobs = 2;
  return options;
}

TEST_CASE("census with max_n = 3") {
  const CensusReport report = run_census(small(3));
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].descriptor() == "A[3,1] vs A[3,1]");
  CHECK(report.rows[1].descriptor() == "Ci[6,{1,2}] vs A[3,1]");
  for (const auto& row : report.rows) {
    CHECK(row.decider_result);
    CHECK(row.oracle_result);
    CHECK(row.agree);
    CHECK(row.witness_verified == true);
  }
  CHECK(report.passed());
  CHECK(report.failures().empty());
}

TEST_CASE("small census passes and is deterministic") {
  CensusOptions options = small(8);
  options.torus_max_order = 16;
  const CensusReport one = run_census(options);
  options.jobs = 1;
  const CensusReport two = run_census(options);
  CHECK(one.passed());
  REQUIRE(one.rows.size() == two.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].params == two.rows[i].params);
    CHECK(one.rows[i].decider_result == two.rows[i].decider_result);
  }
  bool saw_torus = false;
  for (const auto& row : one.rows) {
    saw_torus |= row.family == CensusFamily::kCirculantTorus;
    if (!row.decider_result) CHECK_FALSE(row.witness_verified.has_value());
  }
  CHECK(saw_torus);
}

TEST_CASE("census report json") {
  const std::string text = to_json(run_census(small(3)));
  CHECK(text.find("\"passed\": true") != std::string::npos);
  CHECK(text.find("Ci[6,{1,2}] vs A[3,1]") != std::string::npos);
}

TEST_CASE("census rejects max_n below 3") {
  CHECK_THROWS_AS(run_census(small(2)), InvalidParameter);
}

}  // namespace
}  // namespace quartic
