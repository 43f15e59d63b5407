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

#include <random>
#include <set>

#include "gauss/gf2.hpp"

using namespace gauss;

namespace {

std::vector<std::vector<int>> random_rows(std::mt19937& rng, int n, int m) {
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
  for (auto& r : rows) {
    for (auto& x : r) x = coin(rng);
  }
  return rows;
}

BitVector bits(const std::vector<int>& v) {
  BitVector b(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) b.set(static_cast<int>(i));
  }
  return b;
}

}  // namespace

TEST_CASE("BitVector basics across word boundaries") {
  BitVector v(130);
  CHECK_FALSE(v.any());
  CHECK(v.lowest() < 0);
  v.set(129);
  v.set(64);
  v.flip(3);
  CHECK(v.count() == 3);
  CHECK(v.lowest() == 3);
  v.flip(3);
  CHECK(v.lowest() == 64);
  BitVector w(130);
  w.set(129);
  w.set(1);
  CHECK(and_count(v, w) == 1);
  CHECK(dot(v, w));
  w ^= v;
  CHECK(w.count() == 2);
}

TEST_CASE("matrix product matches the definition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 9;
    const auto a = random_rows(rng, n, n), b = random_rows(rng, n, n);
    const GF2Matrix p = GF2Matrix::from_rows(a) * GF2Matrix::from_rows(b);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int k = 0; k < n; ++k) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        REQUIRE(p.get(i, j) == (s % 2 == 1));
      }
    }
  }
}

TEST_CASE("matrix helpers") {
  const GF2Matrix m = GF2Matrix::from_rows({{0, 1}, {0, 0}});
  CHECK_FALSE(m.is_symmetric());
  CHECK(m.transpose().get(1, 0));
  CHECK((m * m).is_zero());
  CHECK((m + m).is_zero());
  CHECK(GF2Matrix::identity(3) * GF2Matrix::identity(3) == GF2Matrix::identity(3));
  CHECK(m.to_string() == "0 1\n0 0\n");
  const GF2Matrix s = GF2Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(gf2_square(s) == s * s);
  CHECK(s.row_dot(0, 1));
}

TEST_CASE("Gf2System solution sets match exhaustive search") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int unknowns = 1 + trial % 10;
    const int equations = 1 + static_cast<int>(rng() % 12);
    const auto coeffs = random_rows(rng, equations, unknowns);
    const auto rhs = random_rows(rng, 1, equations).front();

    Gf2System system(unknowns);
    for (int e = 0; e < equations; ++e) system.add(bits(coeffs[static_cast<std::size_t>(e)]), rhs[static_cast<std::size_t>(e)]);

    std::set<std::uint32_t> expected;
    for (std::uint32_t x = 0; x < (1U << unknowns); ++x) {
      bool ok = true;
      for (int e = 0; e < equations && ok; ++e) {
        int s = 0;
        for (int i = 0; i < unknowns; ++i) s += coeffs[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] & static_cast<int>((x >> i) & 1U);
        ok = (s % 2) == rhs[static_cast<std::size_t>(e)];
      }
      if (ok) expected.insert(x);
    }

    REQUIRE(system.consistent() == !expected.empty());
    if (expected.empty()) {
      CHECK_FALSE(system.solve().has_value());
      continue;
    }
    const BitVector base = *system.solve();
    const auto basis = system.nullspace();
    CHECK(static_cast<int>(basis.size()) == unknowns - system.rank());
    std::set<std::uint32_t> got;
    for (std::uint32_t mask = 0; mask < (1U << basis.size()); ++mask) {
      BitVector x = base;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if ((mask >> k) & 1U) x ^= basis[k];
      }
      std::uint32_t packed = 0;
      for (int i = 0; i < unknowns; ++i) packed |= static_cast<std::uint32_t>(x.test(i)) << i;
      got.insert(packed);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("add_pair detects an odd cycle of inequalities") {
  Gf2System system(3);
  CHECK(system.add_pair(0, 1, true));
  CHECK(system.add_pair(1, 2, true));
  CHECK_FALSE(system.add_pair(0, 2, true));
  CHECK_FALSE(system.consistent());
  CHECK_FALSE(system.add_pair(0, 1, false));
}
