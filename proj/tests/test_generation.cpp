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
#include <set>

#include "gauss/circle_graph.hpp"
#include "gauss/error.hpp"
#include "gauss/generation.hpp"
#include "oracles.hpp"

using namespace gauss;

namespace {

std::set<oracle::Pairs> as_pairs(const std::vector<Lintel>& ls) {
  std::set<oracle::Pairs> out;
  for (const auto& l : ls) out.insert(oracle::pairs_of(l));
  return out;
}

bool contains(const std::vector<Lintel>& sorted, const Lintel& l) {
  return std::binary_search(sorted.begin(), sorted.end(), canonical_lintel(l));
}

}  // namespace

TEST_CASE("enumerate_all counts") {
  const std::vector<std::size_t> expected{1, 1, 3, 5, 17, 53, 260};
  for (int n = 1; n <= 7; ++n) {
    const DiagramStream s = enumerate_all(n, {}, 2);
    CHECK(s.size == n);
    CHECK(s.source == StreamSource::PermutationScan);
    CHECK(s.diagrams.size() == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(std::is_sorted(s.diagrams.begin(), s.diagrams.end()));
  }
}

TEST_CASE("enumerate_all equals the matching-class oracle") {
  for (int n = 1; n <= 6; ++n) CHECK(as_pairs(enumerate_all(n).diagrams) == oracle::classes(n));
}

TEST_CASE("enumerate_all applies the predicate to canonical lintels") {
  const auto prime = enumerate_all(6, [](const Lintel& l) { return is_canonical(l) && is_prime(l); });
  CHECK(prime.diagrams.size() == 8);
}

TEST_CASE("enumerate_all output does not depend on the worker count") {
  CHECK(enumerate_all(7, {}, 1).diagrams == enumerate_all(7, {}, 3).diagrams);
  CHECK(enumerate_prime(7, 1).diagrams == enumerate_prime(7, 3).diagrams);
}

TEST_CASE("wheels") {
  CHECK(wheel(3).to_text() == "0-3,1-4,2-5");
  CHECK(wheel(2).to_text() == "0-2,1-3");
  for (int n = 1; n <= 9; ++n) {
    const Lintel w = wheel(n);
    CHECK(is_canonical(w));
    CHECK(static_cast<int>(interlacement_graph(w).edges().size()) == n * (n - 1) / 2);
    CHECK(w.is_even_odd() == (n % 2 == 1));
    if (n % 2 == 0) {
      // A chord spanning n positions joins two of the same parity in every image.
      for (const auto& img : oracle::orbit(oracle::pairs_of(w))) {
        std::vector<Chord> chords;
        for (auto [a, b] : img) chords.push_back({a, b});
        CHECK_THROWS_AS(validate_lintel(chords), GaussError);
      }
    }
  }
}

TEST_CASE("classify_arc") {
  for (int arc = 0; arc < 6; ++arc) CHECK(classify_arc(wheel(3), arc) == ArcKind::Cross);
  CHECK(classify_arc(Lintel::parse("0-1,2-3"), 1) == ArcKind::Parallel);
  try {
    classify_arc(Lintel::parse("0-5,1-6,2-3,4-7"), 2);
    FAIL("expected SameChordArc");
  } catch (const GaussError& e) {
    CHECK(e.code() == Errc::SameChordArc);
  }
}

TEST_CASE("a parallel teepee move can make a prime diagram composite") {
  const Lintel left = Lintel::parse("0-7,1-8,2-5,3-6,4-9");
  const Lintel right = Lintel::parse("0-3,1-10,2-11,4-7,5-8,6-9");
  CHECK(is_prime(left));
  CHECK_FALSE(is_prime(right));
  const Lintel moved = teepee_move(left, 4, 1);
  CHECK(are_equivalent(moved, right));
  CHECK(teepee_move_kind(left, 4, 1) == ArcKind::Parallel);
}

TEST_CASE("teepee moves preserve even-odd matchings and reverse cleanly") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& l : enumerate_all(n).diagrams) {
      for (int c = 0; c < n; ++c) {
        for (int a = 0; a < 2 * n; ++a) {
          const Lintel t = teepee_move(l, c, a);
          REQUIRE(t.size() == n + 1);
          CHECK_NOTHROW(validate_lintel(t.chords()));
          CHECK(are_equivalent(reverse_teepee_move(t, a + 1), l));
          CHECK(teepee_move_kind(l, c, a) == classify_arc(t, a + 1));
        }
      }
    }
  }
}

TEST_CASE("teepee moves check their arguments") {
  const Lintel l = wheel(3);
  CHECK_THROWS_AS(teepee_move(l, 3, 0), GaussError);
  CHECK_THROWS_AS(teepee_move(l, 0, 6), GaussError);
  CHECK_THROWS_AS(teepee_move(wheel(2), 0, 0), GaussError);
  CHECK_THROWS_AS(reverse_teepee_move(Lintel::parse("0-1,2-3"), 0), GaussError);
}

TEST_CASE("enumerate_prime counts") {
  const std::vector<std::size_t> expected{1, 0, 1, 1, 4, 8, 40, 183};
  for (int n = 1; n <= 8; ++n) {
    const DiagramStream s = enumerate_prime(n);
    CHECK(s.source == StreamSource::TeepeeIncremental);
    CHECK(s.diagrams.size() == expected[static_cast<std::size_t>(n - 1)]);
    if (n % 2 == 1) CHECK(contains(s.diagrams, wheel(n)));
  }
}

TEST_CASE("teepee primes equal connected classes of the full scan") {
  for (int n = 1; n <= 7; ++n) {
    std::set<oracle::Pairs> connected;
    for (const auto& p : oracle::classes(n)) {
      if (oracle::connected(oracle::interlacement(p))) connected.insert(p);
    }
    CHECK(as_pairs(enumerate_prime(n).diagrams) == connected);
  }
}

TEST_CASE("PrimeLadder caches levels") {
  PrimeLadder ladder(1);
  CHECK(ladder.level(1).size() == 1);
  CHECK(ladder.level(2).empty());
  CHECK(ladder.level(6).size() == 8);
  CHECK(ladder.level(5).size() == 4);
}

TEST_CASE("each move kind alone misses a prime diagram") {
  const Lintel needs_parallel = Lintel::parse("0-7,1-8,2-5,3-6,4-9");
  const Lintel needs_cross = Lintel::parse("0-3,1-6,2-5,4-7");
  for (const Lintel& l : {needs_parallel, needs_cross}) {
    const auto parents = enumerate_prime(l.size() - 1).diagrams;
    const bool by_cross = contains(teepee_children(parents, MoveKinds::CrossOnly), l);
    const bool by_parallel = contains(teepee_children(parents, MoveKinds::ParallelOnly), l);
    CHECK(is_prime(l));
    CHECK(contains(teepee_children(parents), l));
    if (l == needs_parallel) {
      CHECK_FALSE(by_cross);
      CHECK(by_parallel);
    } else {
      CHECK(by_cross);
      CHECK_FALSE(by_parallel);
    }
  }
}
