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

#include "gauss/meander.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "gauss/error.hpp"
#include "gauss/realizability.hpp"
#include "gauss/workers.hpp"

namespace gauss {

void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(x)]) {
      throw GaussError(Errc::NotAPermutation, "'" + to_text(p) + "' is not a permutation of 1.." +
                                                  std::to_string(p.size()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  Permutation p;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      p.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw GaussError(Errc::ParseError, "bad permutation entry '" + token + "'");
    }
  }
  if (p.empty()) throw GaussError(Errc::ParseError, "empty permutation");
  validate_permutation(p);
  return p;
}

std::string to_text(const Permutation& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(p[k]);
  }
  return out;
}

InversionSet r_pi(const Permutation& pi) {
  validate_permutation(pi);
  InversionSet r;
  const int n = static_cast<int>(pi.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi[static_cast<std::size_t>(i - 1)] > pi[static_cast<std::size_t>(j - 1)]) r.emplace_back(i, j);
    }
  }
  return r;
}

namespace {

std::vector<std::vector<bool>> pair_table(const InversionSet& r, int n) {
  std::vector<std::vector<bool>> in(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  for (auto [i, j] : r) {
    if (i < 1 || j > n || i >= j) throw GaussError(Errc::IndexOutOfRange, "pair outside 1.." + std::to_string(n));
    in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  return in;
}

}  // namespace

bool comes_from_permutation(const InversionSet& r, int n) {
  const auto in = pair_table(r, n);
  auto has = [&](int a, int b) { return in[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (has(i, j) && has(j, k) && !has(i, k)) return false;
        if (has(i, k) && !has(i, j) && !has(j, k)) return false;
      }
    }
  }
  return true;
}

Permutation permutation_from_inversions(const InversionSet& r, int n) {
  if (!comes_from_permutation(r, n)) throw GaussError(Errc::InvalidArgument, "pairs do not form an inversion set");
  const auto in = pair_table(r, n);
  // pi(i) - 1 counts the positions whose image is below pi(i).
  Permutation pi(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int below = 0;
    for (int j = 1; j < i; ++j) below += in[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] ? 0 : 1;
    for (int j = i + 1; j <= n; ++j) below += in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
    pi[static_cast<std::size_t>(i - 1)] = below + 1;
  }
  return pi;
}

CircleGraph meander_graph(const Permutation& pi) {
  validate_permutation(pi);
  const int n = static_cast<int>(pi.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi[static_cast<std::size_t>(i - 1)] < pi[static_cast<std::size_t>(j - 1)]) edges.emplace_back(i, j);
    }
  }
  return CircleGraph::from_edges(n + 1, edges);
}

bool idempotency_check(const CircleGraph& g) {
  const auto& m = g.matrix();
  return m * m == m;
}

bool is_meander_graph(const CircleGraph& g) {
  const int n = g.size() - 1;
  if (n < 1) return false;
  if (g.degree(0) != n) return false;
  InversionSet r;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!g.adjacent(i, j)) r.emplace_back(i, j);
    }
  }
  return comes_from_permutation(r, n) && idempotency_check(g);
}

Lintel meander_closure_diagram(const Permutation& pi) {
  validate_permutation(pi);
  const int n = static_cast<int>(pi.size());
  if (n % 2 != 0) throw GaussError(Errc::OddOrder, "meander order " + std::to_string(n) + " is odd");
  std::vector<Chord> chords(static_cast<std::size_t>(n + 1));
  chords[0] = {0, n + 1};
  for (int k = 1; k <= n; ++k) chords[static_cast<std::size_t>(k)].a = k;
  for (int k = 1; k <= n; ++k) chords[static_cast<std::size_t>(pi[static_cast<std::size_t>(k - 1)])].b = n + 1 + k;
  return Lintel::from_chords(chords);
}

bool is_meandric(const Permutation& pi) {
  validate_permutation(pi);
  if (pi.size() % 2 != 0) return false;
  return stz_solve(interlacement_graph(meander_closure_diagram(pi))).sat;
}

bool is_meander_diagram(const Lintel& l) {
  const CircleGraph g = interlacement_graph(l);
  bool dominated = false;
  for (int v = 0; v < g.size() && !dominated; ++v) dominated = g.degree(v) == g.size() - 1;
  return dominated && stz_solve(g).sat;
}

namespace {

// Vertices are 1..N as bits of a mask; vertex 0 stays implicit. Choosing
// vertex c joins it to every larger unchosen vertex, which fixes the whole
// neighbourhood of c, so both gates are final once checked.
class MeanderSearch {
 public:
  explicit MeanderSearch(int n) : n_(n), rows_(static_cast<std::size_t>(n + 1), 0) {}

  void run(int first, std::vector<Permutation>& out) {
    if (choose(first)) extend(out);
    undo(first);
  }

 private:
  using Mask = std::uint64_t;

  static Mask bit(int v) { return Mask{1} << v; }

  bool choose(int c) {
    for (int w = c + 1; w <= n_; ++w) {
      if (!(chosen_ & bit(w))) {
        rows_[static_cast<std::size_t>(c)] |= bit(w);
        rows_[static_cast<std::size_t>(w)] |= bit(c);
      }
    }
    chosen_ |= bit(c);
    order_.push_back(c);
    const Mask row = rows_[static_cast<std::size_t>(c)];
    if (std::popcount(row) % 2 == 0) return false;
    for (int d : order_) {
      if (d == c) continue;
      const int common = std::popcount(row & rows_[static_cast<std::size_t>(d)]);
      const bool adjacent = (row & bit(d)) != 0;
      // With vertex 0 counted, the common count must match adjacency.
      if ((common % 2 == 0) != adjacent) return false;
    }
    return true;
  }

  void undo(int c) {
    for (int w = c + 1; w <= n_; ++w) {
      if (!(chosen_ & bit(w))) {
        rows_[static_cast<std::size_t>(c)] &= ~bit(w);
        rows_[static_cast<std::size_t>(w)] &= ~bit(c);
      }
    }
    chosen_ &= ~bit(c);
    order_.pop_back();
  }

  void extend(std::vector<Permutation>& out) {
    const int step = static_cast<int>(order_.size());
    if (step == n_) {
      out.push_back(order_);
      return;
    }
    // Steps alternate between odd and even vertices, odd first.
    for (int c = (step % 2 == 0) ? 1 : 2; c <= n_; c += 2) {
      if (chosen_ & bit(c)) continue;
      if (choose(c)) extend(out);
      undo(c);
    }
  }

  int n_;
  std::vector<Mask> rows_;
  Mask chosen_ = 0;
  Permutation order_;
};

}  // namespace

std::vector<Permutation> meander_search(int N, int workers) {
  if (N < 2 || N % 2 != 0) throw GaussError(Errc::OddOrder, "meander order must be even and at least 2");
  if (N > 62) throw GaussError(Errc::SizeTooLargeForOracle, "meander order " + std::to_string(N) + " is too large");
  workers = resolve_workers(workers);
  const int branches = N / 2;
  std::vector<std::vector<Permutation>> found(static_cast<std::size_t>(branches));
  parallel_for(workers, branches, [&](int, int b) {
    MeanderSearch search(N);
    search.run(2 * b + 1, found[static_cast<std::size_t>(b)]);
  });
  std::vector<Permutation> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace gauss
