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

#include "gauss/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "gauss/error.hpp"
#include "gauss/workers.hpp"

namespace gauss {
namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into each cell until nothing changes.
void refine(const std::vector<Mask>& rows, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      Mask splitter = 0;
      for (int v : cells[w]) splitter |= Mask{1} << v;
      Cells next;
      next.reserve(cells.size() + 4);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> counted;
        for (int v : cell) counted.emplace_back(std::popcount(rows[static_cast<std::size_t>(v)] & splitter), v);
        std::stable_sort(counted.begin(), counted.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        std::size_t start = 0;
        for (std::size_t k = 1; k <= counted.size(); ++k) {
          if (k == counted.size() || counted[k].first != counted[start].first) {
            std::vector<int> part;
            for (std::size_t t = start; t < k; ++t) part.push_back(counted[t].second);
            next.push_back(std::move(part));
            start = k;
          }
        }
        if (counted.front().first != counted.back().first) changed = true;
      }
      cells = std::move(next);
    }
  }
}

class Labeler {
 public:
  explicit Labeler(const CircleGraph& g) : n_(g.size()), rows_(static_cast<std::size_t>(n_), 0) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (g.adjacent(i, j)) rows_[static_cast<std::size_t>(i)] |= Mask{1} << j;
      }
    }
  }

  // Canonical vertex order: position p holds vertex order[p].
  std::vector<int> run() {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root.front().begin(), root.front().end(), 0);
    if (n_ == 0) return {};
    refine(rows_, root);
    search(root, 0);
    return best_order_;
  }

  std::string code(const std::vector<int>& order) const {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    for (int p = 0; p < n_; ++p) {
      const Mask row = rows_[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
      for (int q = p + 1; q < n_; ++q) bits.push_back(((row >> order[static_cast<std::size_t>(q)]) & 1U) ? '1' : '0');
    }
    return bits;
  }

 private:
  // Returns a level to unwind to; the search stops below that level.
  int search(const Cells& cells, int depth) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, depth);

    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    for (int v : cells[t]) {
      if (!explored.empty() && in_explored_orbit(v, explored)) continue;
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k != t) {
          child.push_back(cells[k]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[k]) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      refine(rows_, child);
      path_.push_back(v);
      const int back = search(child, depth + 1);
      path_.pop_back();
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Cells& cells, int depth) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) order.push_back(c.front());
    std::string c = code(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_path_ = path_;
      best_order_ = order;
      best_code_ = std::move(c);
      return depth;
    }
    if (c == first_code()) {
      const auto gamma = mapping(first_order_, order);
      automorphisms_.push_back(gamma);
      // The subtree at the divergence point is the image of the first one.
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      bool maps_path = true;
      for (std::size_t i = 0; i <= d && i < path_.size() && i < first_path_.size(); ++i) {
        if (gamma[static_cast<std::size_t>(first_path_[i])] != path_[i]) maps_path = false;
      }
      return maps_path ? static_cast<int>(d) : depth;
    }
    if (c == best_code_) {
      automorphisms_.push_back(mapping(best_order_, order));
    } else if (c > best_code_) {
      best_code_ = std::move(c);
      best_order_ = order;
    }
    return depth;
  }

  const std::string& first_code() {
    if (first_code_.empty() && n_ > 1) first_code_ = code(first_order_);
    return first_code_;
  }

  // gamma(from[p]) = to[p]; an automorphism when both orders give one code.
  std::vector<int> mapping(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(p)])] = to[static_cast<std::size_t>(p)];
    return gamma;
  }

  // Orbit of v under the stored automorphisms that fix the current path pointwise.
  bool in_explored_orbit(int v, const std::vector<int>& explored) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : path_) {
        if (gamma[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  int n_;
  std::vector<Mask> rows_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_order_;
  std::string first_code_;
  std::vector<int> best_order_;
  std::string best_code_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalGraphLabel canonical_graph_label(const CircleGraph& g) {
  const int n = g.size();
  if (n > kMaxCensusVertices) {
    throw GaussError(Errc::SizeTooLargeForCensus, std::to_string(n) + " vertices exceeds the census limit of " +
                                                      std::to_string(kMaxCensusVertices));
  }
  Labeler labeler(g);
  const std::vector<int> order = labeler.run();
  CanonicalGraphLabel label;
  label.n = n;
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
  for (auto [i, j] : g.edges()) {
    const int a = position[static_cast<std::size_t>(i)], b = position[static_cast<std::size_t>(j)];
    label.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(label.edges.begin(), label.edges.end());

  const std::string bits = labeler.code(order);
  label.key.push_back(static_cast<char>(n));
  for (std::size_t k = 0; k < bits.size(); k += 8) {
    unsigned char byte = 0;
    for (std::size_t b = 0; b < 8 && k + b < bits.size(); ++b) {
      if (bits[k + b] == '1') byte |= static_cast<unsigned char>(1U << b);
    }
    label.key.push_back(static_cast<char>(byte));
  }
  return label;
}

std::size_t count_nonisomorphic(const DiagramStream& diagrams, const LintelPredicate& filter, int workers) {
  workers = resolve_workers(workers);
  std::vector<std::unordered_set<std::string>> keys(static_cast<std::size_t>(workers));
  const auto& items = diagrams.diagrams;
  parallel_for(workers, static_cast<int>(items.size()), [&](int w, int item) {
    const Lintel& l = items[static_cast<std::size_t>(item)];
    if (filter && !filter(l)) return;
    keys[static_cast<std::size_t>(w)].insert(canonical_graph_label(interlacement_graph(l)).key);
  });
  for (std::size_t w = 1; w < keys.size(); ++w) keys.front().merge(keys[w]);
  return keys.front().size();
}

}  // namespace gauss
