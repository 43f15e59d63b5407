// Copyright 2026 The gausscheck Authors
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

#include <string>
#include <utility>
#include <vector>

#include "gauss/gf2.hpp"
#include "gauss/lintel.hpp"

namespace gauss {

using Edge = std::pair<int, int>;

// Simple undirected graph held as a symmetric zero-diagonal GF(2) matrix.
// Immutable once built.
class CircleGraph {
 public:
  CircleGraph() = default;
  explicit CircleGraph(int n) : adj_(n) {}

  static CircleGraph from_edges(int n, const std::vector<Edge>& edges);
  // Rejects non-symmetric matrices and set diagonal entries.
  static CircleGraph from_matrix(GF2Matrix m);

  int size() const noexcept { return adj_.size(); }
  bool adjacent(int i, int j) const noexcept { return adj_.get(i, j); }
  int degree(int i) const noexcept { return adj_.row(i).count(); }
  const GF2Matrix& matrix() const noexcept { return adj_; }

  std::vector<int> neighbours(int i) const;
  // Number of common neighbours of i and j.
  int common_count(int i, int j) const noexcept { return and_count(adj_.row(i), adj_.row(j)); }
  // Edges (i, j) with i < j in row-major order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_bipartite() const;

  // Graph on vertices order[0..k) with vertex order[p] renamed p.
  CircleGraph relabel(const std::vector<int>& order) const;

  friend bool operator==(const CircleGraph&, const CircleGraph&) = default;

 private:
  GF2Matrix adj_;
};

// Chords c and d cross: exactly one endpoint of d lies strictly between the
// endpoints of c.
bool interlaces(const Lintel& l, int c, int d);

// Vertices are chords in sorted-lintel order.
CircleGraph interlacement_graph(const Lintel& l);
// Vertex k - 1 is the chord of letter k.
CircleGraph interlacement_graph(const GaussWord& word);

// Connected interlacement graph; a single chord is prime.
bool is_prime(const Lintel& l);

// <m_i, m_j> mod 2; for i == j this is the degree parity.
bool common_parity(const CircleGraph& g, int i, int j);

struct WeightedEdge {
  int i = 0;
  int j = 0;
  bool weight = false;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// omega(i, j) = <m_i, m_j> on every edge, in row-major order.
using EdgeWeighting = std::vector<WeightedEdge>;
EdgeWeighting edge_weighting(const CircleGraph& g);

// Undirected DOT with vertices labelled 1..n (or 1..n-1 when vertex 0 is
// hidden, as for meander graphs).
std::string to_dot(const CircleGraph& g, bool hide_vertex_zero = false);
// {"n": n, "edges": [[i, j], ...]} with one-based labels.
std::string to_json(const CircleGraph& g, bool hide_vertex_zero = false);

}  // namespace gauss
