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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "quartic/census.hpp"
#include "quartic/deciders.hpp"
#include "quartic/error.hpp"
#include "quartic/graph.hpp"
#include "quartic/io.hpp"
#include "quartic/modarith.hpp"
#include "quartic/oracle.hpp"
#include "quartic/witness.hpp"

namespace quartic::cli {

namespace {

using Json = nlohmann::ordered_json;
using Int = long long;

constexpr std::uint64_t kDefaultSeed = 20260101;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

struct GenArgs {
  std::string format = "json";
  bool shuffle = false;
  std::uint64_t seed = kDefaultSeed;
  Int n = 0, k = 0, a = 0, b = 0, n1 = 0, n2 = 0;
};

Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, VertexMap(std::move(perm)));
}

std::string render(const Graph& g, const std::string& format) {
  if (format == "dot") return to_dot(g);
  if (format == "edgelist") return to_edgelist(g);
  return to_json(g);
}

struct DecideArgs {
  Int n = 0, k = 0, k1 = 0, k2 = 0, a = 0, b = 0;
  Int nprime = 0, a1 = 0, a2 = 0, n1 = 0, n2 = 0;
  std::string family = "accordion";
  bool witness = false;
  std::string witness_out;
};

// Re-verifies and emits a witness; a failed check is a hard error.
void emit_witness(const Graph& source, const Graph& target, const VertexMap& m,
                  const DecideArgs& args, std::ostream& out) {
  if (!verify_witness(source, target, m)) {
    throw InvariantViolation("witness failed self-check; refusing to print it");
  }
  const std::string doc = to_json(WitnessDocument{source, target, m});
  if (args.witness_out.empty()) {
    out << doc;
  } else {
    write_file(args.witness_out, doc);
  }
}

int decide_acc_acc(const DecideArgs& args, std::ostream& out) {
  const AccAccVerdict v = accordions_isomorphic(args.n, args.k1, args.k2);
  Json j;
  j["kind"] = "acc-acc";
  j["n"] = args.n;
  j["k1"] = args.k1;
  j["k2"] = args.k2;
  j["gcd_n_k1"] = v.gcd1;
  j["gcd_n_k2"] = v.gcd2;
  j["gcds_equal_2"] = v.gcd1 == 2 && v.gcd2 == 2;
  j["half_product_mod_n"] = v.half_product ? Json(*v.half_product) : Json(nullptr);
  j["branch"] = std::string(to_string(v.branch));
  j["isomorphic"] = v.isomorphic;
  out << j.dump() << '\n';
  if (v.isomorphic && args.witness) {
    const Graph source = accordion(AccordionParams::make(args.n, args.k2));
    const Graph target = accordion(AccordionParams::make(args.n, args.k1));
    emit_witness(source, target, accordion_iso_witness(args.n, args.k1, args.k2),
                 args, out);
  }
  return v.isomorphic ? kYes : kNo;
}

int decide_ci_acc(const DecideArgs& args, std::ostream& out) {
  Json j;
  j["kind"] = "ci-acc";
  j["n"] = args.n;
  j["a"] = args.a;
  j["b"] = args.b;
  j["k"] = args.k;
  CiAccVerdict v;
  try {
    v = circulant_iso_accordion(args.n, args.a, args.b, args.k);
  } catch (const NotApplicable& e) {
    j["isomorphic"] = false;
    j["reason"] = std::string("not-applicable: ") + e.what();
    out << j.dump() << '\n';
    return kError;
  }
  j["regime"] = std::string(to_string(v.regime));
  j["oriented_a"] = v.a;
  j["oriented_b"] = v.b;
  j["swapped"] = v.swapped;
  j["gcd_2n_a"] = v.gcd_2n_a;
  j["gcd_2n_b"] = v.gcd_2n_b;
  j["gcd_n_k"] = v.gcd_n_k;
  Json conditions;
  if (v.regime == Regime::kBipartite) {
    conditions["n_even_and_k_is_2"] = args.n % 2 == 0 && args.k == 2;
    conditions["lengths_coprime_to_2n"] = v.gcd_2n_a == 1 && v.gcd_2n_b == 1;
    conditions["a_plus_b_is_n"] = v.a + v.b == args.n;
  } else {
    j["lambda"] = *v.lambda;
    j["sign"] = v.sign;
    conditions["k_odd_when_n_even"] = args.n % 2 != 0 || args.k % 2 != 0;
    conditions["circulant_connected"] = v.connected;
    conditions["gcd_2n_a_equals_gcd_n_k"] = v.gcd_2n_a == v.gcd_n_k;
    conditions["b_q_congruent_pm_2_lambda_a"] = v.sign != 0;
  }
  j["conditions"] = conditions;
  j["isomorphic"] = v.isomorphic;
  out << j.dump() << '\n';
  if (v.isomorphic && args.witness) {
    const Graph source = circulant(CirculantParams::make(args.n, args.a, args.b));
    const Graph target = accordion(AccordionParams::make(args.n, args.k));
    emit_witness(source, target,
                 circulant_accordion_witness(args.n, args.a, args.b, args.k), args,
                 out);
  }
  return v.isomorphic ? kYes : kNo;
}

int decide_ci_torus(const DecideArgs& args, std::ostream& out) {
  Int n1 = args.n1, n2 = args.n2;
  Json j;
  j["kind"] = "ci-torus";
  j["nprime"] = args.nprime;
  j["a1"] = args.a1;
  j["a2"] = args.a2;
  bool iso = false;
  if (n1 == 0 && n2 == 0) {
    const auto found = find_torus_factors(args.nprime, args.a1, args.a2);
    iso = found.has_value();
    if (found) std::tie(n1, n2) = *found;
    j["searched_factors"] = true;
  } else {
    iso = circulant_iso_torus(args.nprime, args.a1, args.a2, n1, n2);
  }
  const Int g1 = gcd(args.nprime, circulant_length(args.nprime, args.a1));
  const Int g2 = gcd(args.nprime, circulant_length(args.nprime, args.a2));
  j["gcd_nprime_a1"] = g1;
  j["gcd_nprime_a2"] = g2;
  if (n1 != 0) {
    j["n1"] = n1;
    j["n2"] = n2;
    j["conditions"] = {
        {"nprime_is_n1_n2", args.nprime == n1 * n2},
        {"gcds_match_factors", (g1 == n1 && g2 == n2) || (g1 == n2 && g2 == n1)},
        {"factors_coprime", gcd(n1, n2) == 1}};
  }
  j["isomorphic"] = iso;
  out << j.dump() << '\n';
  if (iso && args.witness) {
    const Graph source =
        circulant_of_order(static_cast<int>(args.nprime), args.a1, args.a2);
    const Graph target = cartesian_product(cycle_graph(static_cast<int>(n1)),
                                           cycle_graph(static_cast<int>(n2)));
    const auto found = are_isomorphic(source, target);
    if (!found) throw InvariantViolation("oracle disagrees with the torus decider");
    emit_witness(source, target, *found, args, out);
  }
  return iso ? kYes : kNo;
}

int decide_acc_circulant(const DecideArgs& args, std::ostream& out) {
  const bool circ = accordion_is_circulant(args.n, args.k);
  const char* clause = args.k % 2 != 0   ? "k-odd"
                       : args.n % 2 != 0 ? "k-even-n-odd"
                       : args.k == 2     ? "k-is-2-n-even"
                                         : "none";
  Json j;
  j["kind"] = "acc-circulant";
  j["n"] = args.n;
  j["k"] = args.k;
  j["clause"] = clause;
  j["circulant"] = circ;
  // Name a concrete circulant through the circulant-accordion deciders.
  std::optional<std::pair<Int, Int>> lengths;
  for (Int a = 1; a < args.n && !lengths; ++a) {
    for (Int b = a + 1; b < args.n && !lengths; ++b) {
      if ((a % 2 == 0) && (b % 2 == 0)) continue;
      if (circulant_iso_accordion(args.n, a, b, args.k).isomorphic) {
        lengths = std::pair{a, b};
      }
    }
  }
  if (lengths.has_value() != circ) {
    throw InvariantViolation("circulance criterion disagrees with the "
                             "circulant-accordion deciders");
  }
  if (lengths) j["circulant_lengths"] = {lengths->first, lengths->second};
  out << j.dump() << '\n';
  if (circ && args.witness) {
    const Graph source =
        circulant(CirculantParams::make(args.n, lengths->first, lengths->second));
    const Graph target = accordion(AccordionParams::make(args.n, args.k));
    emit_witness(source, target,
                 circulant_accordion_witness(args.n, lengths->first,
                                             lengths->second, args.k),
                 args, out);
  }
  return circ ? kYes : kNo;
}

int decide_structural(const DecideArgs& args, bool bipartite, std::ostream& out) {
  Json j;
  j["kind"] = bipartite ? "bipartite" : "connected";
  j["family"] = args.family;
  bool decided = false;
  Graph built;
  if (args.family == "accordion") {
    j["n"] = args.n;
    j["k"] = args.k;
    const auto p = AccordionParams::make(args.n, args.k);
    // Accordions are always connected: two n-cycles joined by spokes.
    decided = bipartite ? accordion_is_bipartite(args.n, args.k) : true;
    built = accordion(p);
  } else {
    j["n"] = args.n;
    j["a"] = args.a;
    j["b"] = args.b;
    decided = bipartite ? circulant_is_bipartite(args.n, args.a, args.b)
                        : circulant_is_connected(args.n, args.a, args.b);
    built = circulant(CirculantParams::make(args.n, args.a, args.b));
  }
  const bool structural = bipartite ? is_bipartite(built) : is_connected(built);
  if (structural != decided) {
    throw InvariantViolation("arithmetic criterion disagrees with the graph");
  }
  j[bipartite ? "bipartite" : "connected"] = decided;
  out << j.dump() << '\n';
  return decided ? kYes : kNo;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Accordion graphs, quartic circulants and their isomorphisms",
               "quartic"};
  app.require_subcommand(1);

  // gen
  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph to standard output");
  gen_cmd->require_subcommand(1);
  auto gen_common = [&](CLI::App* sub) {
    sub->add_option("--format", gen.format, "json, dot or edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));
    sub->add_flag("--shuffle", gen.shuffle, "Relabel vertices randomly");
    sub->add_option("--seed", gen.seed, "Seed for --shuffle");
  };
  auto* gen_acc = gen_cmd->add_subcommand("accordion", "A[n,k]");
  gen_acc->add_option("--n", gen.n)->required();
  gen_acc->add_option("--k", gen.k)->required();
  auto* gen_ci = gen_cmd->add_subcommand("circulant", "Ci[2n,{a,b}]");
  gen_ci->add_option("--n", gen.n)->required();
  gen_ci->add_option("--a", gen.a)->required();
  gen_ci->add_option("--b", gen.b)->required();
  auto* gen_torus = gen_cmd->add_subcommand("torus", "C_n1 x C_n2");
  gen_torus->add_option("--n1", gen.n1)->required();
  gen_torus->add_option("--n2", gen.n2)->required();
  auto* gen_cyl = gen_cmd->add_subcommand("cyl", "C_n1 x P_n2");
  gen_cyl->add_option("--n1", gen.n1)->required();
  gen_cyl->add_option("--n2", gen.n2)->required();
  for (auto* sub : {gen_acc, gen_ci, gen_torus, gen_cyl}) gen_common(sub);

  // decide
  DecideArgs dec;
  auto* decide_cmd = app.add_subcommand("decide", "Evaluate an isomorphism criterion");
  decide_cmd->require_subcommand(1);
  auto witness_flags = [&](CLI::App* sub) {
    sub->add_flag("--witness", dec.witness, "Print a verified vertex map");
    sub->add_option("--witness-out", dec.witness_out,
                    "Write the witness document to a file instead");
  };
  auto* d_acc = decide_cmd->add_subcommand("acc-acc", "A[n,k1] vs A[n,k2]");
  d_acc->add_option("--n", dec.n)->required();
  d_acc->add_option("--k1", dec.k1)->required();
  d_acc->add_option("--k2", dec.k2)->required();
  witness_flags(d_acc);
  auto* d_ci = decide_cmd->add_subcommand("ci-acc", "Ci[2n,{a,b}] vs A[n,k]");
  d_ci->add_option("--n", dec.n)->required();
  d_ci->add_option("--a", dec.a)->required();
  d_ci->add_option("--b", dec.b)->required();
  d_ci->add_option("--k", dec.k)->required();
  witness_flags(d_ci);
  auto* d_torus = decide_cmd->add_subcommand("ci-torus", "Ci[n',{a1,a2}] vs C_n1 x C_n2");
  d_torus->add_option("--nprime", dec.nprime)->required();
  d_torus->add_option("--a1", dec.a1)->required();
  d_torus->add_option("--a2", dec.a2)->required();
  auto* opt_n1 = d_torus->add_option("--n1", dec.n1, "Omit both to search");
  auto* opt_n2 = d_torus->add_option("--n2", dec.n2);
  opt_n1->needs(opt_n2);
  opt_n2->needs(opt_n1);
  witness_flags(d_torus);
  auto* d_circ = decide_cmd->add_subcommand("acc-circulant", "Is A[n,k] circulant?");
  d_circ->add_option("--n", dec.n)->required();
  d_circ->add_option("--k", dec.k)->required();
  witness_flags(d_circ);
  auto* d_bip = decide_cmd->add_subcommand("bipartite", "Bipartiteness criterion");
  auto* d_conn = decide_cmd->add_subcommand("connected", "Connectivity criterion");
  for (auto* sub : {d_bip, d_conn}) {
    sub->add_option("--family", dec.family)
        ->check(CLI::IsMember({"accordion", "circulant"}));
    sub->add_option("--n", dec.n)->required();
    sub->add_option("--k", dec.k);
    sub->add_option("--a", dec.a);
    sub->add_option("--b", dec.b);
  }

  // oracle / verify
  std::string file_g, file_h, witness_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "Search-based isomorphism test (prints a witness)");
  oracle_cmd->add_option("G", file_g, "Graph document")->required();
  oracle_cmd->add_option("H", file_h, "Graph document")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Re-verify a witness document");
  verify_cmd->add_option("WITNESS", witness_file)->required();

  // census
  CensusOptions census;
  std::string census_out;
  auto* census_cmd = app.add_subcommand("census", "Cross-check deciders against the oracle");
  census_cmd->add_option("--max-n", census.max_n, "Largest accordion n");
  census_cmd->add_option("--circulant-max", census.circulant_max_n,
                         "Largest n for circulant-accordion rows");
  census_cmd->add_option("--torus-max", census.torus_max_order,
                         "Largest circulant order for torus rows");
  census_cmd->add_option("--jobs", census.jobs, "Worker threads (0: all cores)");
  census_cmd->add_option("--out", census_out, "Report file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kYes : kError;
  }

  try {
    if (*gen_cmd) {
      Graph g;
      if (*gen_acc) {
        g = accordion(AccordionParams::make(gen.n, gen.k));
      } else if (*gen_ci) {
        g = circulant(CirculantParams::make(gen.n, gen.a, gen.b));
      } else {
        if (gen.n1 < 3 || gen.n2 < 1 || (*gen_torus && gen.n2 < 3) ||
            gen.n1 * gen.n2 > 2 * kMaxParameter) {
          throw InvalidParameter("factor sizes out of range");
        }
        const Graph second = *gen_torus ? cycle_graph(static_cast<int>(gen.n2))
                                        : path_graph(static_cast<int>(gen.n2));
        g = cartesian_product(cycle_graph(static_cast<int>(gen.n1)), second);
      }
      if (gen.shuffle) g = shuffled(g, gen.seed);
      out << render(g, gen.format);
      return kYes;
    }
    if (*decide_cmd) {
      if (*d_acc) return decide_acc_acc(dec, out);
      if (*d_ci) return decide_ci_acc(dec, out);
      if (*d_torus) return decide_ci_torus(dec, out);
      if (*d_circ) return decide_acc_circulant(dec, out);
      return decide_structural(dec, static_cast<bool>(*d_bip), out);
    }
    if (*oracle_cmd) {
      const Graph g = parse_graph(read_file(file_g));
      const Graph h = parse_graph(read_file(file_h));
      const auto found = are_isomorphic(g, h);
      if (!found) {
        out << "{\"isomorphic\":false}\n";
        return kNo;
      }
      out << to_json(WitnessDocument{g, h, *found});
      return kYes;
    }
    if (*verify_cmd) {
      const WitnessDocument w = parse_witness(read_file(witness_file));
      if (w.source.order() != w.target.order()) {
        out << "{\"verified\":false}\n";
        return kNo;
      }
      const bool ok = verify_witness(w.source, w.target, w.mapping);
      out << (ok ? "{\"verified\":true}\n" : "{\"verified\":false}\n");
      return ok ? kYes : kNo;
    }
    if (*census_cmd) {
      const CensusReport report = run_census(census);
      if (!census_out.empty()) write_file(census_out, to_json(report));
      std::size_t positive = 0;
      for (const auto& r : report.rows) positive += r.decider_result ? 1 : 0;
      out << "rows: " << report.rows.size() << "\nisomorphic: " << positive
          << "\nfailures: " << report.failures().size() << '\n';
      for (const CensusVerdict* r : report.failures()) {
        out << "FAIL " << r->descriptor() << " decider=" << r->decider_result
            << " oracle=" << r->oracle_result << " witness="
            << (r->witness_verified ? (*r->witness_verified ? "ok" : "bad") : "-")
            << '\n';
      }
      return report.passed() ? kYes : kNo;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace quartic::cli
