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

#include "quartic/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "quartic/error.hpp"

namespace quartic {

namespace {

// colors[s][v] for side s. All sides share one palette so that equal colors
// across graphs mean equal refinement histories.
using Coloring = std::vector<std::vector<int>>;

// Refines `colors` to the coarsest equitable partition. Returns false as soon
// as two sides disagree on some color class size.
bool refine(const std::vector<const Graph*>& graphs, Coloring& colors,
            int& num_colors) {
  struct Entry {
    std::vector<int> signature;
    int side;
    Vertex vertex;
  };
  const int order = graphs.front()->order();
  std::vector<Entry> entries;
  entries.reserve(graphs.size() * order);
  while (true) {
    entries.clear();
    for (int s = 0; s < static_cast<int>(graphs.size()); ++s) {
      const Graph& g = *graphs[s];
      for (Vertex v = 0; v < order; ++v) {
        Entry e{{colors[s][v]}, s, v};
        for (Vertex w : g.neighbors(v)) e.signature.push_back(colors[s][w]);
        std::sort(e.signature.begin() + 1, e.signature.end());
        entries.push_back(std::move(e));
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& l, const Entry& r) { return l.signature < r.signature; });

    int next = -1;
    std::vector<int> count(graphs.size(), 0);
    auto balanced = [&] {
      return std::all_of(count.begin(), count.end(),
                         [&](int c) { return c == count.front(); });
    };
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i == 0 || entries[i].signature != entries[i - 1].signature) {
        if (i != 0 && !balanced()) return false;
        std::fill(count.begin(), count.end(), 0);
        ++next;
      }
      ++count[entries[i].side];
      colors[entries[i].side][entries[i].vertex] = next;
    }
    if (!balanced()) return false;
    const int refined = next + 1;
    if (refined == num_colors) return true;
    num_colors = refined;
  }
}

// Smallest color class with at least two members; ties go to the lowest
// color. -1 when the coloring is discrete.
int target_cell(const std::vector<int>& colors, int num_colors) {
  std::vector<int> size(num_colors, 0);
  for (int c : colors) ++size[c];
  int best = -1;
  for (int c = 0; c < num_colors; ++c) {
    if (size[c] >= 2 && (best == -1 || size[c] < size[best])) best = c;
  }
  return best;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void spend() {
    if (++used_ > limit_) {
      throw ResourceExhausted("oracle node budget of " + std::to_string(limit_) +
                              " exhausted");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), graphs_{&g, &h} {}

  std::optional<VertexMap> run() {
    Coloring colors(2, std::vector<int>(g_.order(), 0));
    int num_colors = 1;
    if (!refine(graphs_, colors, num_colors)) return std::nullopt;
    return descend(colors, num_colors);
  }

 private:
  std::optional<VertexMap> descend(const Coloring& colors, int num_colors) {
    budget_.spend();
    const int cell = target_cell(colors[0], num_colors);
    if (cell == -1) return leaf(colors);

    const auto& cg = colors[0];
    const auto& ch = colors[1];
    const Vertex v = static_cast<Vertex>(
        std::find(cg.begin(), cg.end(), cell) - cg.begin());
    const auto fixed = singletons(colors, num_colors);
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (ch[w] != cell) continue;
      const bool consistent = std::all_of(
          fixed.begin(), fixed.end(), [&](const std::pair<Vertex, Vertex>& xy) {
            return g_.has_edge(v, xy.first) == h_.has_edge(w, xy.second);
          });
      if (!consistent) continue;
      Coloring next = colors;
      next[0][v] = num_colors;
      next[1][w] = num_colors;
      int next_colors = num_colors + 1;
      if (!refine(graphs_, next, next_colors)) continue;
      if (auto found = descend(next, next_colors)) return found;
    }
    return std::nullopt;
  }

  // Pairs (x, y) already forced onto each other by singleton cells.
  std::vector<std::pair<Vertex, Vertex>> singletons(const Coloring& colors,
                                                    int num_colors) const {
    std::vector<int> size(num_colors, 0);
    std::vector<Vertex> in_g(num_colors, -1), in_h(num_colors, -1);
    for (Vertex x = 0; x < g_.order(); ++x) {
      ++size[colors[0][x]];
      in_g[colors[0][x]] = x;
      in_h[colors[1][x]] = x;
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int c = 0; c < num_colors; ++c) {
      if (size[c] == 1) out.emplace_back(in_g[c], in_h[c]);
    }
    return out;
  }

  std::optional<VertexMap> leaf(const Coloring& colors) const {
    std::vector<Vertex> by_color(h_.order());
    for (Vertex y = 0; y < h_.order(); ++y) by_color[colors[1][y]] = y;
    std::vector<Vertex> mapping(g_.order());
    for (Vertex x = 0; x < g_.order(); ++x) mapping[x] = by_color[colors[0][x]];
    VertexMap candidate(std::move(mapping));
    if (verify_witness(g_, h_, candidate)) return candidate;
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  Budget budget_;
  std::vector<const Graph*> graphs_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t distinct(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  return std::unique(values.begin(), values.end()) - values.begin();
}

void append_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), graphs_{&g} {}

  std::string run() {
    Coloring colors(1, std::vector<int>(g_.order(), 0));
    int num_colors = g_.order() == 0 ? 0 : 1;
    refine(graphs_, colors, num_colors);
    descend(colors, num_colors);
    return best_;
  }

 private:
  void descend(const Coloring& colors, int num_colors) {
    budget_.spend();
    const int cell = target_cell(colors[0], num_colors);
    if (cell == -1) {
      leaf(colors[0]);
      return;
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colors[0][v] != cell) continue;
      Coloring next = colors;
      next[0][v] = num_colors;
      int next_colors = num_colors + 1;
      refine(graphs_, next, next_colors);
      descend(next, next_colors);
    }
  }

  void leaf(const std::vector<int>& label) {
    std::vector<Edge> edges;
    edges.reserve(g_.size());
    for (const Edge& e : g_.edges()) {
      edges.push_back({std::min(label[e.u], label[e.v]),
                       std::max(label[e.u], label[e.v])});
    }
    std::sort(edges.begin(), edges.end());
    std::string key;
    key.reserve(4 + 4 * edges.size());
    append_u16(key, g_.order() >> 16);
    append_u16(key, g_.order());
    for (const Edge& e : edges) {
      append_u16(key, e.u);
      append_u16(key, e.v);
    }
    if (!have_best_ || key < best_) {
      best_ = std::move(key);
      have_best_ = true;
    }
  }

  const Graph& g_;
  Budget budget_;
  std::vector<const Graph*> graphs_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t default_node_budget() {
  const char* raw = std::getenv(kNodeBudgetEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0 || raw[0] == '-') {
    throw InvalidParameter(std::string(kNodeBudgetEnv) +
                           " must be a positive integer, got '" + raw + "'");
  }
  return value;
}

RefinementSignature refinement_signature(const Graph& g) {
  RefinementSignature hash(g.order());
  for (Vertex v = 0; v < g.order(); ++v) hash[v] = mix(g.degree(v));
  std::size_t classes = distinct(hash);
  std::vector<std::uint64_t> around;
  while (true) {
    RefinementSignature next(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      around.clear();
      for (Vertex w : g.neighbors(v)) around.push_back(hash[w]);
      std::sort(around.begin(), around.end());
      std::uint64_t acc = mix(hash[v]);
      for (std::uint64_t x : around) acc = mix(acc ^ x);
      next[v] = acc;
    }
    const std::size_t refined = distinct(next);
    hash = std::move(next);
    if (refined == classes) return hash;
    classes = refined;
  }
}

std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h,
                                        const OracleOptions& options) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.order() == 0) return VertexMap::identity(0);
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  if (is_bipartite(g) != is_bipartite(h)) return std::nullopt;
  if (is_connected(g) != is_connected(h)) return std::nullopt;
  auto sg = refinement_signature(g);
  auto sh = refinement_signature(h);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;

  auto found = IsoSearch(g, h, options.node_budget).run();
  if (found && !verify_witness(g, h, *found)) {
    throw InvariantViolation("oracle produced a map that fails verification");
  }
  return found;
}

std::string canonical_key(const Graph& g, const OracleOptions& options) {
  if (g.order() > options.max_canonical_order) {
    throw ResourceExhausted("canonical_key is limited to " +
                            std::to_string(options.max_canonical_order) +
                            " vertices, got " + std::to_string(g.order()));
  }
  return CanonicalSearch(g, options.node_budget).run();
}

}  // namespace quartic
