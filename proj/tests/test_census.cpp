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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gauss/census.hpp"
#include "gauss/error.hpp"
#include "gauss/generation.hpp"
#include "gauss/realizability.hpp"
#include "oracles.hpp"

using namespace gauss;

namespace {

CircleGraph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return CircleGraph::from_edges(n, edges);
}

CircleGraph shuffled(const CircleGraph& g, std::mt19937& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return g.relabel(order);
}

bool realizable(const Lintel& l) { return stz_solve(interlacement_graph(l)).sat; }

}  // namespace

TEST_CASE("simple label examples") {
  const CircleGraph k3a = CircleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const CircleGraph k3b = CircleGraph::from_edges(3, {{2, 1}, {0, 2}, {1, 0}});
  CHECK(canonical_graph_label(k3a) == canonical_graph_label(k3b));

  const CircleGraph p4 = CircleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const CircleGraph star = CircleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_graph_label(p4).key != canonical_graph_label(star).key);

  const CircleGraph word_graph = interlacement_graph(GaussWord::parse("12334124"));
  std::mt19937 rng(1);
  for (int k = 0; k < 20; ++k) CHECK(canonical_graph_label(shuffled(word_graph, rng)) == canonical_graph_label(word_graph));

  CHECK(canonical_graph_label(CircleGraph(0)).n == 0);
  CHECK(canonical_graph_label(CircleGraph(1)).edges.empty());
}

TEST_CASE("labels separate exactly the isomorphism classes of small graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, std::string> code_of_key;
    std::map<std::string, std::string> key_of_code;
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const CircleGraph g = from_mask(n, mask);
      const CanonicalGraphLabel label = canonical_graph_label(g);
      const std::string code = oracle::graph_code(oracle::adjacency(g));
      const auto [k, fresh_key] = code_of_key.emplace(label.key, code);
      const auto [c, fresh_code] = key_of_code.emplace(code, label.key);
      REQUIRE(k->second == code);
      REQUIRE(c->second == label.key);
      // The canonical edge list describes a graph isomorphic to g.
      CHECK(oracle::graph_code(oracle::adjacency(CircleGraph::from_edges(n, label.edges))) == code);
    }
    const std::vector<std::size_t> classes{1, 2, 4, 11, 34};
    CHECK(code_of_key.size() == classes[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("labels agree with the oracle on random graphs of 6 to 8 vertices") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + trial % 3;
    const CircleGraph g = from_mask(n, static_cast<std::uint32_t>(rng()) & ((1U << (n * (n - 1) / 2)) - 1));
    const CircleGraph h = trial % 2 ? shuffled(g, rng) : from_mask(n, static_cast<std::uint32_t>(rng()) & ((1U << (n * (n - 1) / 2)) - 1));
    const bool same = oracle::graph_code(oracle::adjacency(g)) == oracle::graph_code(oracle::adjacency(h));
    CHECK((canonical_graph_label(g) == canonical_graph_label(h)) == same);
  }
}

TEST_CASE("highly symmetric graphs") {
  std::vector<Edge> complete;
  for (int i = 0; i < 16; ++i) {
    for (int j = i + 1; j < 16; ++j) complete.emplace_back(i, j);
  }
  const CircleGraph k16 = CircleGraph::from_edges(16, complete);
  CHECK(canonical_graph_label(k16).edges.size() == 120);
  CHECK(canonical_graph_label(CircleGraph(16)).edges.empty());

  // Two disjoint 8-cycles against one 16-cycle: same degrees, not isomorphic.
  std::vector<Edge> two, one;
  for (int i = 0; i < 8; ++i) {
    two.emplace_back(i, (i + 1) % 8);
    two.emplace_back(8 + i, 8 + (i + 1) % 8);
  }
  for (int i = 0; i < 16; ++i) one.emplace_back(std::min(i, (i + 1) % 16), std::max(i, (i + 1) % 16));
  CHECK(canonical_graph_label(CircleGraph::from_edges(16, two)).key !=
        canonical_graph_label(CircleGraph::from_edges(16, one)).key);
}

TEST_CASE("census size limit") {
  try {
    canonical_graph_label(CircleGraph(kMaxCensusVertices + 1));
    FAIL("expected SizeTooLargeForCensus");
  } catch (const GaussError& e) {
    CHECK(e.code() == Errc::SizeTooLargeForCensus);
    CHECK(e.is_resource_limit());
  }
}

TEST_CASE("realizable Gauss graph counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 3, 7, 18};
  for (int n = 3; n <= 8; ++n) {
    const DiagramStream primes = enumerate_prime(n);
    const std::size_t graphs = count_nonisomorphic(primes, realizable, 2);
    CHECK(graphs == expected[static_cast<std::size_t>(n - 3)]);
    CHECK(count_nonisomorphic(primes) <= primes.diagrams.size());
  }
}

TEST_CASE("count_nonisomorphic does not depend on the worker count") {
  const DiagramStream all = enumerate_all(7);
  CHECK(count_nonisomorphic(all, {}, 1) == count_nonisomorphic(all, {}, 4));
}
