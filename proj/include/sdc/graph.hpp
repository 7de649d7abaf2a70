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


// Connected cubic planar bipartite graphs given with an explicit face list,
// their 3-face colorings and the self-dual codes of their face-vertex
// incidence matrices.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

/// Vertices are 0..vertices-1 in memory and 1..vertices in text files.
/// Each face is the cyclic vertex sequence bounding it.
struct PlanarBicubicGraph {
  std::string name;
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> faces;
};

struct ValidationReport {
  /// One entry per failed check, prefixed by the check name
  /// (simple, cubic, bipartite, connected, faces, edge-faces, euler).
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

ValidationReport validate(const PlanarBicubicGraph& g);

/// color[f] in {0, 1, 2}; faces sharing an edge differ.
using FaceColoring = std::vector<int>;

/// First proper coloring found by backtracking over faces in list order,
/// trying colors 0, 1, 2. Throws if none exists.
FaceColoring three_face_coloring(const PlanarBicubicGraph& g);

/// Pairs of faces sharing at least one edge.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_faces(const PlanarBicubicGraph& g);

/// F x n matrix, entry (f, v) = 1 iff v lies on face f.
BinaryMatrix incidence_matrix(const PlanarBicubicGraph& g);

/// The code generated by the incidence matrix without the rows of faces f1
/// and f2, which must receive different colors. Throws when they do not, or if
/// the result fails to be self-dual of dimension n/2.
BinaryCode graph_to_selfdual_code(const PlanarBicubicGraph& g, std::size_t f1, std::size_t f2);

/// First face pair (f1 < f2) with different colors in the canonical coloring.
std::pair<std::size_t, std::size_t> default_face_pair(const PlanarBicubicGraph& g);

/// "cube", "G1" or "G2". Throws on other names.
PlanarBicubicGraph builtin_graph(std::string_view name);
std::vector<std::string> builtin_graph_names();

/// Lines "vertices N", "edge a b", "face v1 v2 ... vk"; '#' starts a comment.
PlanarBicubicGraph parse_graph(std::string_view text);
std::string format_graph(const PlanarBicubicGraph& g);

}  // namespace sdc
