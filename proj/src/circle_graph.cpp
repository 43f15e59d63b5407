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

#include "gauss/circle_graph.hpp"

#include <cstdint>
#include <deque>

#include <json.hpp>

#include "gauss/error.hpp"

namespace gauss {

CircleGraph CircleGraph::from_edges(int n, const std::vector<Edge>& edges) {
  CircleGraph g(n);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw GaussError(Errc::IndexOutOfRange, "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    if (i == j) throw GaussError(Errc::InvalidArgument, "self-loop at " + std::to_string(i));
    g.adj_.set(i, j);
    g.adj_.set(j, i);
  }
  return g;
}

CircleGraph CircleGraph::from_matrix(GF2Matrix m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m.get(i, i)) throw GaussError(Errc::InvalidArgument, "adjacency matrix has a diagonal entry");
  }
  if (!m.is_symmetric()) throw GaussError(Errc::InvalidArgument, "adjacency matrix is not symmetric");
  CircleGraph g;
  g.adj_ = std::move(m);
  return g;
}

std::vector<int> CircleGraph::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<Edge> CircleGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool CircleGraph::is_connected() const {
  const int n = size();
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool CircleGraph::is_bipartite() const {
  const int n = size();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!adjacent(u, v)) continue;
        int& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

CircleGraph CircleGraph::relabel(const std::vector<int>& order) const {
  const int k = static_cast<int>(order.size());
  CircleGraph g(k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      if (adjacent(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)])) g.adj_.set(p, q);
    }
  }
  return g;
}

bool interlaces(const Lintel& l, int c, int d) {
  const Chord& x = l.chord(c);
  const Chord& y = l.chord(d);
  const bool ya = x.a < y.a && y.a < x.b;
  const bool yb = x.a < y.b && y.b < x.b;
  return ya != yb;
}

CircleGraph interlacement_graph(const Lintel& l) {
  const int n = l.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (interlaces(l, i, j)) edges.emplace_back(i, j);
    }
  }
  return CircleGraph::from_edges(n, edges);
}

CircleGraph interlacement_graph(const GaussWord& word) {
  const Lintel l = to_lintel(word);
  // Chord index -> letter index.
  std::vector<int> letter_of(static_cast<std::size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) {
    letter_of[static_cast<std::size_t>(i)] = word.letters()[static_cast<std::size_t>(l.chord(i).a)] - 1;
  }
  std::vector<Edge> edges;
  for (auto [i, j] : interlacement_graph(l).edges()) {
    edges.emplace_back(letter_of[static_cast<std::size_t>(i)], letter_of[static_cast<std::size_t>(j)]);
  }
  return CircleGraph::from_edges(l.size(), edges);
}

bool is_prime(const Lintel& l) {
  // Bitmask connectivity; chords are indexed by their smaller endpoint's rank.
  const int n = l.size();
  if (n <= 1) return true;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (interlaces(l, i, j)) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return seen == all;
}

bool common_parity(const CircleGraph& g, int i, int j) { return g.matrix().row_dot(i, j); }

EdgeWeighting edge_weighting(const CircleGraph& g) {
  EdgeWeighting w;
  for (auto [i, j] : g.edges()) w.push_back({i, j, common_parity(g, i, j)});
  return w;
}

std::string to_dot(const CircleGraph& g, bool hide_vertex_zero) {
  const int first = hide_vertex_zero ? 1 : 0;
  const int offset = hide_vertex_zero ? 0 : 1;
  std::string out = "graph G {\n";
  for (int v = first; v < g.size(); ++v) out += "  " + std::to_string(v + offset) + ";\n";
  for (auto [i, j] : g.edges()) {
    if (i < first) continue;
    out += "  " + std::to_string(i + offset) + " -- " + std::to_string(j + offset) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const CircleGraph& g, bool hide_vertex_zero) {
  const int first = hide_vertex_zero ? 1 : 0;
  const int offset = hide_vertex_zero ? 0 : 1;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) {
    if (i < first) continue;
    edges.push_back({i + offset, j + offset});
  }
  nlohmann::json doc = {{"schema", 1}, {"n", g.size() - first}, {"edges", edges}};
  return doc.dump();
}

}  // namespace gauss
