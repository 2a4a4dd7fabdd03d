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

#include "quartic/io.hpp"

#include <json.hpp>
#include <sstream>

#include "quartic/error.hpp"

namespace quartic {

namespace {

using nlohmann::json;

void write_graph(std::ostringstream& out, const Graph& g) {
  out << "{\"order\":" << g.order() << ",\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : ",") << '[' << e.u << ',' << e.v << ']';
    first = false;
  }
  out << "]}";
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  const auto value = j.get<long long>();
  if (value < 0 || value > 2 * static_cast<long long>(kMaxParameter)) {
    throw ParseError(std::string(what) + " out of range");
  }
  return static_cast<int>(value);
}

Graph graph_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges")) {
    throw ParseError("graph document needs keys \"order\" and \"edges\"");
  }
  const int order = as_int(doc["order"], "order");
  const json& list = doc["edges"];
  if (!list.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("each edge must be a two-element array");
    }
    edges.push_back({as_int(pair[0], "edge endpoint"),
                     as_int(pair[1], "edge endpoint")});
  }
  try {
    return Graph(order, std::move(edges));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string to_json(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  out << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  \"" << v << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << e.u << "\" -- \"" << e.v << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) { return graph_from(parse_json(text)); }

std::string to_json(const WitnessDocument& w) {
  std::ostringstream out;
  out << "{\"source\":";
  write_graph(out, w.source);
  out << ",\"target\":";
  write_graph(out, w.target);
  out << ",\"mapping\":[";
  for (int i = 0; i < w.mapping.source_order(); ++i) {
    out << (i ? "," : "") << w.mapping[i];
  }
  out << "]}\n";
  return out.str();
}

WitnessDocument parse_witness(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("source") || !doc.contains("target") ||
      !doc.contains("mapping") || !doc["mapping"].is_array()) {
    throw ParseError("witness document needs \"source\", \"target\", \"mapping\"");
  }
  WitnessDocument w{graph_from(doc["source"]), graph_from(doc["target"]), {}};
  std::vector<Vertex> mapping;
  for (const json& x : doc["mapping"]) mapping.push_back(as_int(x, "mapping entry"));
  if (static_cast<int>(mapping.size()) != w.source.order()) {
    throw ParseError("mapping length differs from source order");
  }
  try {
    w.mapping = VertexMap(std::move(mapping));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
  return w;
}

}  // namespace quartic
