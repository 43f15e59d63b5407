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

#include "gauss/realizability.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "gauss/error.hpp"

namespace gauss {
namespace {

// First odd-degree vertex or odd non-adjacent pair, scanning (i, j >= i) row-major.
std::optional<Violation> first_parity_violation(const CircleGraph& g) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) % 2 != 0) return Violation{i, i};
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j) && common_parity(g, i, j)) return Violation{i, j};
    }
  }
  return std::nullopt;
}

void check_oracle_size(const CircleGraph& g) {
  if (g.size() > kMaxOracleVertices) {
    throw GaussError(Errc::SizeTooLargeForOracle, std::to_string(g.size()) + " vertices exceeds the oracle limit of " +
                                                      std::to_string(kMaxOracleVertices));
  }
}

std::vector<std::uint64_t> row_masks(const CircleGraph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (g.adjacent(i, j)) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
  }
  return rows;
}

}  // namespace

std::vector<int> StzWitness::diagonal_set() const {
  std::vector<int> k;
  for (int i = 0; i < alpha.size(); ++i) {
    if (alpha.test(i)) k.push_back(i);
  }
  return k;
}

std::vector<BitVector> StzWitness::all_solutions(std::size_t limit) const {
  std::vector<BitVector> out;
  if (!sat) return out;
  const std::size_t dim = nullspace.size();
  for (std::uint64_t mask = 0; out.size() < limit && (dim >= 64 || mask < (std::uint64_t{1} << dim)); ++mask) {
    BitVector x = alpha;
    for (std::size_t k = 0; k < dim && k < 64; ++k) {
      if ((mask >> k) & 1U) x ^= nullspace[k];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool pc1_check(const CircleGraph& g) {
  for (int i = 0; i < g.size(); ++i) {
    if (g.degree(i) % 2 != 0) return false;
  }
  return true;
}

bool pc2_check(const CircleGraph& g) {
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (!g.adjacent(i, j) && common_parity(g, i, j)) return false;
    }
  }
  return true;
}

bool pc3_check(const CircleGraph& g) {
  const int n = g.size();
  const auto& m = g.matrix();
  const std::size_t words = m.size() > 0 ? m.row(0).words().size() : 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!g.adjacent(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!g.adjacent(x, z) || !g.adjacent(y, z)) continue;
        const int tri[3] = {x, y, z};
        for (int t = 0; t < 3; ++t) {
          const int a = tri[t], b = tri[(t + 1) % 3], c = tri[(t + 2) % 3];
          const auto& na = m.row(a).words();
          const auto& nb = m.row(b).words();
          const auto& nc = m.row(c).words();
          int total = 0;
          for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t self = 0;
            for (int v : tri) {
              if (static_cast<std::size_t>(v) / 64 == k) self |= std::uint64_t{1} << (v % 64);
            }
            const std::uint64_t only_a = na[k] & ~nb[k] & ~nc[k] & ~self;
            const std::uint64_t bc_not_a = nb[k] & nc[k] & ~na[k] & ~self;
            total += std::popcount(only_a) + std::popcount(bc_not_a);
          }
          if (total % 2 != 0) return false;
        }
      }
    }
  }
  return true;
}

StzWitness stz_solve(const CircleGraph& g) {
  const int n = g.size();
  StzWitness w;
  Gf2System system(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const bool inner = common_parity(g, i, j);
      if (i == j || !g.adjacent(i, j)) {
        // 0 = <m_i, m_j>: even degree on the diagonal, even common count off it.
        if (inner) {
          w.violation = Violation{i, j};
          return w;
        }
      } else if (!system.add_pair(i, j, !inner)) {
        w.violation = Violation{i, j};
        return w;
      }
    }
  }
  w.sat = true;
  w.alpha = *system.solve();
  w.nullspace = system.nullspace();
  return w;
}

bool stz_satisfied_by(const CircleGraph& g, const BitVector& alpha) {
  const int n = g.size();
  if (alpha.size() != n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool m_ij = g.adjacent(i, j);
      const bool lhs = (alpha.test(i) != alpha.test(j)) && m_ij;
      const bool rhs = common_parity(g, i, j) != m_ij;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool stz_bruteforce(const CircleGraph& g) {
  check_oracle_size(g);
  const int n = g.size();
  const auto rows = row_masks(g);
  std::vector<std::uint64_t> shifted(rows.size());
  for (std::uint64_t lambda = 0; lambda < (std::uint64_t{1} << n); ++lambda) {
    for (int i = 0; i < n; ++i) {
      shifted[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] ^ (((lambda >> i) & 1U) << i);
    }
    // (M + L) is symmetric, so (M + L)^2 has entry <row_i, row_j>.
    bool idempotent = true;
    for (int i = 0; i < n && idempotent; ++i) {
      for (int j = i; j < n; ++j) {
        const bool sq = std::popcount(shifted[static_cast<std::size_t>(i)] & shifted[static_cast<std::size_t>(j)]) & 1;
        if (sq != (((shifted[static_cast<std::size_t>(i)] >> j) & 1U) != 0)) {
          idempotent = false;
          break;
        }
      }
    }
    if (idempotent) return true;
  }
  return false;
}

Verdict realizable_bipartite(const CircleGraph& g) {
  if (auto v = first_parity_violation(g)) return Verdict::no(v);
  const int n = g.size();
  // Odd-parity edges become paths through a fresh vertex.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<Edge> origin;  // original edge of each added vertex
  for (auto [i, j] : g.edges()) {
    if (common_parity(g, i, j)) {
      const int w = n + static_cast<int>(origin.size());
      origin.emplace_back(i, j);
      adj.emplace_back();
      adj[static_cast<std::size_t>(i)].push_back(w);
      adj[static_cast<std::size_t>(j)].push_back(w);
      adj[static_cast<std::size_t>(w)] = {i, j};
    } else {
      adj[static_cast<std::size_t>(i)].push_back(j);
      adj[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  auto original = [&](int x, int y) -> Violation {
    if (x >= n) return {origin[static_cast<std::size_t>(x - n)].first, origin[static_cast<std::size_t>(x - n)].second};
    if (y >= n) return {origin[static_cast<std::size_t>(y - n)].first, origin[static_cast<std::size_t>(y - n)].second};
    return {std::min(x, y), std::max(x, y)};
  };
  std::vector<int> colour(adj.size(), -1);
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        int& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return Verdict::no(original(u, v));
        }
      }
    }
  }
  return Verdict::yes();
}

Verdict cycle_parity_check(const CircleGraph& g) {
  if (auto v = first_parity_violation(g)) return Verdict::no(v);
  const int n = g.size();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<bool>> tree(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int s = 0; s < n; ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    depth[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && depth[static_cast<std::size_t>(v)] < 0) {
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          tree[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
          tree[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
          queue.push_back(v);
        }
      }
    }
  }
  // Each non-tree edge closes one fundamental cycle; these span the cycle
  // space and the condition is linear over GF(2).
  for (auto [u, v] : g.edges()) {
    if (tree[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
    int weight = common_parity(g, u, v) ? 1 : 0;
    int length = 1;
    int x = u, y = v;
    auto step = [&](int& z) {
      const int p = parent[static_cast<std::size_t>(z)];
      weight += common_parity(g, z, p) ? 1 : 0;
      ++length;
      z = p;
    };
    while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) step(x);
    while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) step(y);
    while (x != y) {
      step(x);
      step(y);
    }
    if ((weight - length) % 2 != 0) return Verdict::no(Violation{u, v});
  }
  return Verdict::yes();
}

CircleGraph reduce_vertex(const CircleGraph& g, int v) {
  const int n = g.size();
  if (v < 0 || v >= n) throw GaussError(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  std::vector<Edge> edges;
  auto index = [v](int x) { return x < v ? x : x - 1; };
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == v) continue;
      const bool toggled = g.adjacent(v, a) && g.adjacent(v, b);
      if (g.adjacent(a, b) != toggled) edges.emplace_back(index(a), index(b));
    }
  }
  return CircleGraph::from_edges(n - 1, edges);
}

bool gl_check(const CircleGraph& g) {
  if (!pc2_check(g)) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (!pc2_check(reduce_vertex(g, v))) return false;
  }
  return true;
}

bool b_check(const CircleGraph& g) { return pc1_check(g) && pc2_check(g) && pc3_check(g); }

bool r_conditions_bruteforce(const CircleGraph& g) {
  check_oracle_size(g);
  if (!pc1_check(g)) return false;
  const int n = g.size();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool odd = common_parity(g, u, v);
        const bool same_side = ((subset >> u) & 1U) == ((subset >> v) & 1U);
        if (odd != (g.adjacent(u, v) && same_side)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_planar_diagram(const Lintel& l) { return interlacement_graph(l).is_bipartite(); }

std::string_view criterion_name(Criterion c) noexcept {
  switch (c) {
    case Criterion::Stz: return "stz";
    case Criterion::Bipartite: return "bipartite";
    case Criterion::Cycle: return "cycle";
    case Criterion::B: return "b";
    case Criterion::GL: return "gl";
    case Criterion::RBrute: return "r-brute";
    case Criterion::StzBrute: return "stz-brute";
    case Criterion::Planar: return "planar";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (Criterion c : {Criterion::Stz, Criterion::Bipartite, Criterion::Cycle, Criterion::B, Criterion::GL,
                      Criterion::RBrute, Criterion::StzBrute, Criterion::Planar}) {
    if (criterion_name(c) == name) return c;
  }
  throw GaussError(Errc::InvalidArgument, "unknown criterion '" + std::string(name) + "'");
}

Verdict evaluate(Criterion c, const CircleGraph& g) {
  auto from_bool = [](bool ok) { return ok ? Verdict::yes() : Verdict::no(); };
  switch (c) {
    case Criterion::Stz: {
      const StzWitness w = stz_solve(g);
      return w.sat ? Verdict::yes() : Verdict::no(w.violation);
    }
    case Criterion::Bipartite: return realizable_bipartite(g);
    case Criterion::Cycle: return cycle_parity_check(g);
    case Criterion::B: return from_bool(b_check(g));
    case Criterion::GL: return from_bool(gl_check(g));
    case Criterion::RBrute: return from_bool(r_conditions_bruteforce(g));
    case Criterion::StzBrute: return from_bool(stz_bruteforce(g));
    case Criterion::Planar: return from_bool(g.is_bipartite());
  }
  return Verdict::no();
}

}  // namespace gauss
