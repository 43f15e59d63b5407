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

#include <optional>
#include <string_view>
#include <vector>

#include "gauss/circle_graph.hpp"
#include "gauss/gf2.hpp"
#include "gauss/lintel.hpp"

namespace gauss {

// Brute-force oracles enumerate 2^n subsets.
inline constexpr int kMaxOracleVertices = 24;

// A failed constraint: the index pair (i, j) of the first violated equation
// in row-major order; i == j marks an odd degree.
struct Violation {
  int i = 0;
  int j = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  enum class Kind { Realizable, NotRealizable };

  Kind kind = Kind::Realizable;
  std::optional<Violation> violation;

  bool realizable() const noexcept { return kind == Kind::Realizable; }
  static Verdict yes() { return {}; }
  static Verdict no(std::optional<Violation> v = std::nullopt) { return {Kind::NotRealizable, v}; }
};

// Solution of (a_i + a_j) m_ij = <m_i, m_j> + m_ij over all 1 <= i, j <= n.
struct StzWitness {
  bool sat = false;
  // a_i with free unknowns set to 0; meaningful when sat.
  BitVector alpha;
  // Homogeneous solutions; alpha + any combination is also a solution.
  std::vector<BitVector> nullspace;
  std::optional<Violation> violation;

  // K = {i : a_i = 1}, zero-based.
  std::vector<int> diagonal_set() const;
  // Every solution (2^dim of them), capped at `limit`.
  std::vector<BitVector> all_solutions(std::size_t limit = 1U << 16) const;
};

bool pc1_check(const CircleGraph& g);
bool pc2_check(const CircleGraph& g);
bool pc3_check(const CircleGraph& g);

StzWitness stz_solve(const CircleGraph& g);
// True iff alpha satisfies every STZ equation, diagonal ones included.
bool stz_satisfied_by(const CircleGraph& g, const BitVector& alpha);
// Searches all 2^n diagonals L for (M + L)^2 = M + L.
bool stz_bruteforce(const CircleGraph& g);

Verdict realizable_bipartite(const CircleGraph& g);
Verdict cycle_parity_check(const CircleGraph& g);

// Deletes v and toggles adjacency between every two neighbours of v.
CircleGraph reduce_vertex(const CircleGraph& g, int v);

bool gl_check(const CircleGraph& g);
bool b_check(const CircleGraph& g);
bool r_conditions_bruteforce(const CircleGraph& g);

bool is_planar_diagram(const Lintel& l);

enum class Criterion { Stz, Bipartite, Cycle, B, GL, RBrute, StzBrute, Planar };

std::string_view criterion_name(Criterion c) noexcept;
// Accepts the CLI spellings: stz, bipartite, cycle, b, gl, r-brute, stz-brute, planar.
Criterion parse_criterion(std::string_view name);

// Dispatches on a criterion. Planar evaluates bipartiteness of g.
Verdict evaluate(Criterion c, const CircleGraph& g);

}  // namespace gauss
