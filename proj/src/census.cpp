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

#include <algorithm>
#include <atomic>
#include <functional>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "quartic/deciders.hpp"
#include "quartic/error.hpp"
#include "quartic/graph.hpp"
#include "quartic/witness.hpp"

namespace quartic {

namespace {

using Clock = std::chrono::steady_clock;

void evaluate_accordion_pair(CensusVerdict& row, const OracleOptions& oracle) {
  const auto n = row.params[0], k1 = row.params[1], k2 = row.params[2];
  const AccAccVerdict verdict = accordions_isomorphic(n, k1, k2);
  row.decider_result = verdict.isomorphic;
  row.note = std::string(to_string(verdict.branch));
  const Graph g1 = accordion(AccordionParams::make(n, k1));
  const Graph g2 = accordion(AccordionParams::make(n, k2));
  row.oracle_result = are_isomorphic(g1, g2, oracle).has_value();
  if (row.decider_result) {
    row.witness_verified = verify_witness(g2, g1, accordion_iso_witness(n, k1, k2));
  }
}

void evaluate_circulant_accordion(CensusVerdict& row, const OracleOptions& oracle) {
  const auto n = row.params[0], a = row.params[1], b = row.params[2],
             k = row.params[3];
  try {
    const CiAccVerdict verdict = circulant_iso_accordion(n, a, b, k);
    row.decider_result = verdict.isomorphic;
    row.note = std::string(to_string(verdict.regime));
  } catch (const NotApplicable&) {
    row.decider_result = false;
    row.note = "not-applicable";
  }
  const Graph ci = circulant(CirculantParams::make(n, a, b));
  const Graph acc = accordion(AccordionParams::make(n, k));
  row.oracle_result = are_isomorphic(ci, acc, oracle).has_value();
  if (row.decider_result) {
    row.witness_verified =
        verify_witness(ci, acc, circulant_accordion_witness(n, a, b, k));
  }
}

void evaluate_torus(CensusVerdict& row, const OracleOptions& oracle) {
  const auto order = row.params[0], a1 = row.params[1], a2 = row.params[2],
             n1 = row.params[3], n2 = row.params[4];
  row.decider_result = circulant_iso_torus(order, a1, a2, n1, n2);
  const Graph ci = circulant_of_order(static_cast<int>(order), a1, a2);
  const Graph torus = cartesian_product(cycle_graph(static_cast<int>(n1)),
                                        cycle_graph(static_cast<int>(n2)));
  const auto found = are_isomorphic(ci, torus, oracle);
  row.oracle_result = found.has_value();
  // No constructive map exists for this family; the oracle's map is checked.
  if (row.decider_result) {
    row.witness_verified = found && verify_witness(ci, torus, *found);
  }
}

std::vector<CensusVerdict> enumerate(const CensusOptions& options) {
  std::vector<CensusVerdict> rows;
  auto add = [&](CensusFamily family, std::vector<std::int64_t> params) {
    CensusVerdict row;
    row.family = family;
    row.params = std::move(params);
    rows.push_back(std::move(row));
  };
  for (std::int64_t n = 3; n <= options.max_n; ++n) {
    for (std::int64_t k1 = 1; 2 * k1 <= n; ++k1) {
      for (std::int64_t k2 = k1; 2 * k2 <= n; ++k2) {
        add(CensusFamily::kAccordionPair, {n, k1, k2});
      }
    }
  }
  const int ci_max = std::min(options.max_n, options.circulant_max_n);
  for (std::int64_t n = 3; n <= ci_max; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = a + 1; b < n; ++b) {
        for (std::int64_t k = 1; 2 * k <= n; ++k) {
          add(CensusFamily::kCirculantAccordion, {n, a, b, k});
        }
      }
    }
  }
  for (std::int64_t order = std::max(options.torus_min_order, 5);
       order <= options.torus_max_order; ++order) {
    for (std::int64_t n1 = 3; n1 * n1 <= order; ++n1) {
      if (order % n1 != 0) continue;
      const std::int64_t n2 = order / n1;
      for (std::int64_t a1 = 1; 2 * a1 < order; ++a1) {
        for (std::int64_t a2 = a1 + 1; 2 * a2 < order; ++a2) {
          add(CensusFamily::kCirculantTorus, {order, a1, a2, n1, n2});
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(CensusFamily family) {
  switch (family) {
    case CensusFamily::kAccordionPair: return "accordion-accordion";
    case CensusFamily::kCirculantAccordion: return "circulant-accordion";
    case CensusFamily::kCirculantTorus: return "circulant-torus";
  }
  return "?";
}

std::string CensusVerdict::descriptor() const {
  auto s = [&](std::size_t i) { return std::to_string(params[i]); };
  switch (family) {
    case CensusFamily::kAccordionPair:
      return "A[" + s(0) + "," + s(1) + "] vs A[" + s(0) + "," + s(2) + "]";
    case CensusFamily::kCirculantAccordion:
      return "Ci[" + std::to_string(2 * params[0]) + ",{" + s(1) + "," + s(2) +
             "}] vs A[" + s(0) + "," + s(3) + "]";
    case CensusFamily::kCirculantTorus:
      return "Ci[" + s(0) + ",{" + s(1) + "," + s(2) + "}] vs C" + s(3) + "xC" +
             s(4);
  }
  return "?";
}

bool CensusReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CensusVerdict& r) { return r.agree; });
}

bool CensusReport::all_witnesses_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const CensusVerdict& r) {
    return !r.witness_verified || *r.witness_verified;
  });
}

std::vector<const CensusVerdict*> CensusReport::failures() const {
  std::vector<const CensusVerdict*> out;
  for (const auto& r : rows) {
    if (!r.agree || (r.witness_verified && !*r.witness_verified)) out.push_back(&r);
  }
  return out;
}

CensusReport run_census(const CensusOptions& options) {
  if (options.max_n < 3) {
    throw InvalidParameter("census needs max_n >= 3, got " +
                           std::to_string(options.max_n));
  }
  CensusReport report;
  report.rows = enumerate(options);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) {
      CensusVerdict& row = report.rows[i];
      const auto start = Clock::now();
      try {
        switch (row.family) {
          case CensusFamily::kAccordionPair:
            evaluate_accordion_pair(row, options.oracle);
            break;
          case CensusFamily::kCirculantAccordion:
            evaluate_circulant_accordion(row, options.oracle);
            break;
          case CensusFamily::kCirculantTorus:
            evaluate_torus(row, options.oracle);
            break;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
      row.agree = row.decider_result == row.oracle_result;
      row.elapsed = Clock::now() - start;
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return report;
}

std::string to_json(const CensusReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::size_t positive = 0;
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["family"] = std::string(to_string(r.family));
    row["params"] = r.params;
    row["descriptor"] = r.descriptor();
    row["decider"] = r.decider_result;
    row["oracle"] = r.oracle_result;
    row["agree"] = r.agree;
    row["witness_verified"] =
        r.witness_verified ? nlohmann::ordered_json(*r.witness_verified) : nullptr;
    row["elapsed_us"] =
        std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
    row["note"] = r.note;
    rows.push_back(std::move(row));
    positive += r.decider_result ? 1 : 0;
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"rows", report.rows.size()},
                    {"isomorphic", positive},
                    {"disagreements", report.failures().size()},
                    {"passed", report.passed()}};
  return doc.dump(1) + "\n";
}

}  // namespace quartic
