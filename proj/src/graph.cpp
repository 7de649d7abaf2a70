// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sdc/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "sdc/error.hpp"

namespace sdc {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Edge normalized(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Undirected edges along each face boundary.
std::vector<std::vector<Edge>> face_edges(const PlanarBicubicGraph& g) {
  std::vector<std::vector<Edge>> out;
  for (const auto& f : g.faces) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < f.size(); ++i) es.push_back(normalized(f[i], f[(i + 1) % f.size()]));
    out.push_back(std::move(es));
  }
  return out;
}

std::vector<std::vector<std::size_t>> adjacency(const PlanarBicubicGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (auto [a, b] : g.edges) {
    if (a < g.vertices && b < g.vertices) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  return adj;
}

std::string label(std::size_t v) { return "v" + std::to_string(v + 1); }

}  // namespace

ValidationReport validate(const PlanarBicubicGraph& g) {
  ValidationReport report;
  auto fail = [&](std::string check, std::string detail) {
    report.failures.push_back(std::move(check) + ": " + std::move(detail));
  };

  std::set<Edge> edge_set;
  for (auto [a, b] : g.edges) {
    if (a >= g.vertices || b >= g.vertices) {
      fail("simple", "edge references a vertex outside 1.." + std::to_string(g.vertices));
      continue;
    }
    if (a == b) fail("simple", "loop at " + label(a));
    if (!edge_set.insert(normalized(a, b)).second)
      fail("simple", "repeated edge " + label(a) + "-" + label(b));
  }

  const auto adj = adjacency(g);
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (adj[v].size() != 3)
      fail("cubic", label(v) + " has degree " + std::to_string(adj[v].size()));

  // breadth-first 2-coloring also yields connectivity
  std::vector<int> side(g.vertices, -1);
  std::size_t reached = 0;
  bool bipartite = true;
  if (g.vertices > 0) {
    std::queue<std::size_t> q;
    side[0] = 0;
    q.push(0);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      ++reached;
      for (std::size_t w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          bipartite = false;
        }
      }
    }
  }
  if (!bipartite) fail("bipartite", "odd cycle found");
  if (reached != g.vertices)
    fail("connected", std::to_string(g.vertices - reached) + " vertices unreachable from v1");

  std::map<Edge, int> uses;
  for (const auto& e : edge_set) uses[e] = 0;
  const auto fes = face_edges(g);
  for (std::size_t f = 0; f < fes.size(); ++f) {
    if (g.faces[f].size() < 3) fail("faces", "face " + std::to_string(f + 1) + " has fewer than 3 vertices");
    for (const auto& e : fes[f]) {
      auto it = uses.find(e);
      if (it == uses.end())
        fail("faces", "face " + std::to_string(f + 1) + " walks non-edge " + label(e.first) + "-" +
                          label(e.second));
      else
        ++it->second;
    }
  }
  for (const auto& [e, count] : uses)
    if (count != 2)
      fail("edge-faces", "edge " + label(e.first) + "-" + label(e.second) + " lies on " +
                             std::to_string(count) + " face boundaries");

  const auto euler = static_cast<long long>(g.vertices) - static_cast<long long>(g.edges.size()) +
                     static_cast<long long>(g.faces.size());
  if (euler != 2) fail("euler", "V - E + F = " + std::to_string(euler));
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> adjacent_faces(const PlanarBicubicGraph& g) {
  const auto fes = face_edges(g);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t f = 0; f < fes.size(); ++f)
    for (std::size_t h = f + 1; h < fes.size(); ++h) {
      const bool shared = std::any_of(fes[f].begin(), fes[f].end(), [&](const Edge& e) {
        return std::find(fes[h].begin(), fes[h].end(), e) != fes[h].end();
      });
      if (shared) out.emplace_back(f, h);
    }
  return out;
}

FaceColoring three_face_coloring(const PlanarBicubicGraph& g) {
  const std::size_t nf = g.faces.size();
  std::vector<std::vector<std::size_t>> nbr(nf);
  for (auto [f, h] : adjacent_faces(g)) {
    nbr[f].push_back(h);
    nbr[h].push_back(f);
  }
  FaceColoring color(nf, -1);
  auto assign = [&](auto&& self, std::size_t f) -> bool {
    if (f == nf) return true;
    for (int c = 0; c < 3; ++c) {
      const bool clash =
          std::any_of(nbr[f].begin(), nbr[f].end(), [&](std::size_t h) { return color[h] == c; });
      if (clash) continue;
      color[f] = c;
      if (self(self, f + 1)) return true;
    }
    color[f] = -1;
    return false;
  };
  if (!assign(assign, 0))
    throw Error("no proper 3-face coloring exists; the graph is not bicubic planar as given");
  return color;
}

BinaryMatrix incidence_matrix(const PlanarBicubicGraph& g) {
  BinaryMatrix d(g.faces.size(), g.vertices);
  for (std::size_t f = 0; f < g.faces.size(); ++f)
    for (std::size_t v : g.faces[f]) d.set(f, v);
  return d;
}

BinaryCode graph_to_selfdual_code(const PlanarBicubicGraph& g, std::size_t f1, std::size_t f2) {
  if (f1 >= g.faces.size() || f2 >= g.faces.size() || f1 == f2)
    throw Error("face pair must name two distinct faces");
  const auto color = three_face_coloring(g);
  if (color[f1] == color[f2])
    throw Error("faces " + std::to_string(f1 + 1) + " and " + std::to_string(f2 + 1) +
                " have the same color");
  const std::size_t drop[] = {f1, f2};
  const BinaryMatrix rows = incidence_matrix(g).without_rows(drop);
  if (rank(rows) != rows.rows())
    throw Error("remaining face rows are dependent; self-duality assertion failed");
  BinaryCode code(rows);
  if (!is_self_dual(code)) throw Error("face code is not self-dual; self-duality assertion failed");
  return code;
}

std::pair<std::size_t, std::size_t> default_face_pair(const PlanarBicubicGraph& g) {
  const auto color = three_face_coloring(g);
  for (std::size_t f = 0; f < color.size(); ++f)
    for (std::size_t h = f + 1; h < color.size(); ++h)
      if (color[f] != color[h]) return {f, h};
  throw Error("all faces share one color");
}

namespace {

PlanarBicubicGraph from_one_based(std::string name, std::size_t n,
                                  std::initializer_list<std::pair<int, int>> edges,
                                  std::initializer_list<std::initializer_list<int>> faces) {
  PlanarBicubicGraph g;
  g.name = std::move(name);
  g.vertices = n;
  for (auto [a, b] : edges)
    g.edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  for (const auto& f : faces) {
    std::vector<std::size_t> cyc;
    for (int v : f) cyc.push_back(static_cast<std::size_t>(v - 1));
    g.faces.push_back(std::move(cyc));
  }
  return g;
}

PlanarBicubicGraph cube() {
  // f1 inner square, f2 right, f3 bottom, f4 left, f5 top, f6 outer
  return from_one_based(
      "cube", 8,
      {{1, 2}, {1, 4}, {1, 5}, {2, 6}, {2, 3}, {3, 7}, {3, 4}, {4, 8}, {5, 6}, {6, 7}, {7, 8}, {5, 8}},
      {{1, 2, 3, 4}, {2, 6, 7, 3}, {3, 7, 8, 4}, {1, 4, 8, 5}, {1, 5, 6, 2}, {5, 6, 7, 8}});
}

PlanarBicubicGraph g1() {
  // outer 8-cycle v1..v8, inner 8-cycle v9..v16, spokes (vi, vi+8)
  return from_one_based(
      "G1", 16,
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1},
       {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 9},
       {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}, {8, 16}, {1, 9}},
      {{1, 2, 3, 4, 5, 6, 7, 8},
       {9, 10, 11, 12, 13, 14, 15, 16},
       {1, 2, 10, 9},
       {2, 3, 11, 10},
       {3, 4, 12, 11},
       {4, 5, 13, 12},
       {5, 6, 14, 13},
       {6, 7, 15, 14},
       {7, 8, 16, 15},
       {8, 1, 9, 16}});
}

PlanarBicubicGraph g2() {
  // traced from the drawing; the arc v8-v16 runs around the top and right
  return from_one_based(
      "G2", 16,
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 8}, {6, 1}, {7, 8},
       {7, 9}, {7, 6}, {1, 9}, {9, 10}, {2, 10}, {10, 11}, {11, 12}, {12, 13},
       {13, 3}, {13, 14}, {4, 14}, {11, 16}, {15, 16}, {12, 15}, {14, 15}, {8, 16}},
      {{1, 2, 3, 4, 5, 6},
       {2, 1, 9, 10},
       {3, 2, 10, 11, 12, 13},
       {4, 3, 13, 14},
       {5, 4, 14, 15, 16, 8},
       {6, 5, 8, 7},
       {1, 6, 7, 9},
       {7, 8, 16, 11, 10, 9},
       {12, 11, 16, 15},
       {13, 12, 15, 14}});
}

}  // namespace

PlanarBicubicGraph builtin_graph(std::string_view name) {
  if (name == "cube") return cube();
  if (name == "G1") return g1();
  if (name == "G2") return g2();
  throw Error("unknown built-in graph '" + std::string(name) + "' (known: cube, G1, G2)");
}

std::vector<std::string> builtin_graph_names() { return {"cube", "G1", "G2"}; }

PlanarBicubicGraph parse_graph(std::string_view text) {
  PlanarBicubicGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_count = false;
  auto vertex = [&](long long v) {
    if (!have_count) throw Error("line " + std::to_string(lineno) + ": 'vertices' must come first");
    if (v < 1 || static_cast<std::size_t>(v) > g.vertices)
      throw Error("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v - 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "vertices") {
      long long n = 0;
      if (!(ls >> n) || n <= 0) throw Error("line " + std::to_string(lineno) + ": bad vertex count");
      g.vertices = static_cast<std::size_t>(n);
      have_count = true;
    } else if (keyword == "edge") {
      long long a = 0, b = 0;
      if (!(ls >> a >> b)) throw Error("line " + std::to_string(lineno) + ": edge needs two vertices");
      g.edges.emplace_back(vertex(a), vertex(b));
    } else if (keyword == "face") {
      std::vector<std::size_t> f;
      long long v = 0;
      while (ls >> v) f.push_back(vertex(v));
      if (f.empty()) throw Error("line " + std::to_string(lineno) + ": empty face");
      g.faces.push_back(std::move(f));
    } else if (keyword == "name") {
      ls >> g.name;
    } else {
      throw Error("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!have_count) throw Error("graph file has no 'vertices' line");
  return g;
}

std::string format_graph(const PlanarBicubicGraph& g) {
  std::ostringstream out;
  if (!g.name.empty()) out << "name " << g.name << '\n';
  out << "vertices " << g.vertices << '\n';
  for (auto [a, b] : g.edges) out << "edge " << a + 1 << ' ' << b + 1 << '\n';
  for (const auto& f : g.faces) {
    out << "face";
    for (std::size_t v : f) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace sdc
