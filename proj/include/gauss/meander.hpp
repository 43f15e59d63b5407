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
#include <string_view>
#include <utility>
#include <vector>

#include "gauss/circle_graph.hpp"
#include "gauss/lintel.hpp"

namespace gauss {

// Images pi(1), ..., pi(n).
using Permutation = std::vector<int>;
// Pairs (i, j) with 1 <= i < j <= n, sorted.
using InversionSet = std::vector<std::pair<int, int>>;

// Throws NotAPermutation unless p lists 1..n in some order.
void validate_permutation(const Permutation& p);
Permutation parse_permutation(std::string_view text);
std::string to_text(const Permutation& p);

InversionSet r_pi(const Permutation& pi);
bool comes_from_permutation(const InversionSet& r, int n);
// The unique pi with r_pi(pi) == r; requires comes_from_permutation(r, n).
Permutation permutation_from_inversions(const InversionSet& r, int n);

// Vertex 0 joined to all of 1..n; i < j adjacent iff (i, j) is not an inversion.
CircleGraph meander_graph(const Permutation& pi);

// M^2 == M over GF(2).
bool idempotency_check(const CircleGraph& g);

// Vertex 0 dominates, the non-edges among 1..n form an inversion set, and M is
// idempotent.
bool is_meander_graph(const CircleGraph& g);

// Chords of the closed curve `0 1 .. n 0 pi(1) .. pi(n)`: chord k joins the two
// occurrences of crossing k, chord 0 is the closing crossing. Throws OddOrder.
Lintel meander_closure_diagram(const Permutation& pi);

// Even order and a realizable closure.
bool is_meandric(const Permutation& pi);

// Realizable and some chord interlaces every other chord.
bool is_meander_diagram(const Lintel& l);

// All meandric permutations of order N found by the alternating odd/even
// choice search; sorted. Throws OddOrder for odd N.
std::vector<Permutation> meander_search(int N, int workers = 0);

}  // namespace gauss
