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

#include "gauss/generation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>

#include "gauss/circle_graph.hpp"
#include "gauss/error.hpp"
#include "gauss/workers.hpp"

namespace gauss {
namespace {

using KeySet = std::unordered_set<std::string>;
using Buffer = std::array<std::uint8_t, 2 * kMaxChords + 2>;

std::vector<Lintel> merge_sorted(std::vector<KeySet>& parts, const LintelPredicate& predicate) {
  KeySet all = std::move(parts.front());
  for (std::size_t k = 1; k < parts.size(); ++k) {
    all.merge(parts[k]);
    parts[k].clear();
  }
  std::vector<Lintel> out;
  out.reserve(all.size());
  for (const auto& key : all) {
    Lintel l = Lintel::from_key(key);
    if (!predicate || predicate(l)) out.push_back(std::move(l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Chords of partner[0..m) cross iff exactly one endpoint of one lies inside the other.
bool crosses(const std::uint8_t* p, int x, int y) {
  const int a = std::min<int>(x, p[x]), b = std::max<int>(x, p[x]);
  const int c = std::min<int>(y, p[y]), d = std::max<int>(y, p[y]);
  return (a < c && c < b) != (a < d && d < b);
}

bool connected(const std::uint8_t* p, int m) {
  const int n = m / 2;
  if (n <= 1) return true;
  std::array<int, 2 * kMaxChords + 2> rank{};
  std::array<int, kMaxChords + 1> lower{};
  int k = 0;
  for (int x = 0; x < m; ++x) {
    if (p[x] > x) {
      rank[static_cast<std::size_t>(x)] = k;
      lower[static_cast<std::size_t>(k++)] = x;
    }
  }
  std::array<std::uint64_t, kMaxChords + 1> adj{};
  for (int i = 0; i < n; ++i) {
    const int a = lower[static_cast<std::size_t>(i)], b = p[a];
    for (int y = a + 1; y < b; ++y) {
      // Each chord with exactly one endpoint strictly inside (a, b).
      const int z = p[y];
      if (z < a || z > b) {
        const int j = rank[static_cast<std::size_t>(std::min(y, z))];
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return std::popcount(seen) == n;
}

// Writes the teepee move result into out (m + 2 entries); returns the kind
// of the arc between the inserted positions.
ArcKind apply_teepee(const Lintel& l, int chord, int arc, std::uint8_t* out) {
  const int m = l.endpoints();
  auto shift = [arc](int x) { return x <= arc ? x : x + 2; };
  for (int x = 0; x < m; ++x) out[shift(x)] = static_cast<std::uint8_t>(shift(l.partner(x)));
  const int u = shift(l.chord(chord).a);
  const int v = shift(l.chord(chord).b);
  const int sharp = arc + 1, flat = arc + 2;
  // Exactly one reconnection joins values of opposite parity.
  int to_sharp = u, to_flat = v;
  if ((u - sharp) % 2 == 0) std::swap(to_sharp, to_flat);
  out[sharp] = static_cast<std::uint8_t>(to_sharp);
  out[to_sharp] = static_cast<std::uint8_t>(sharp);
  out[flat] = static_cast<std::uint8_t>(to_flat);
  out[to_flat] = static_cast<std::uint8_t>(flat);
  return crosses(out, sharp, flat) ? ArcKind::Cross : ArcKind::Parallel;
}

void check_move(const Lintel& l, int chord, int arc) {
  if (!l.is_even_odd()) throw GaussError(Errc::ParityViolation, "teepee moves need an even-odd matching");
  if (chord < 0 || chord >= l.size()) throw GaussError(Errc::IndexOutOfRange, "chord index " + std::to_string(chord));
  if (arc < 0 || arc >= l.endpoints()) throw GaussError(Errc::IndexOutOfRange, "arc index " + std::to_string(arc));
  if (l.size() + 1 > kMaxChords) throw GaussError(Errc::InvalidArgument, "diagram too large for a teepee move");
}

}  // namespace

DiagramStream enumerate_all(int n, const LintelPredicate& predicate, int workers) {
  if (n < 1 || n > kMaxChords) throw GaussError(Errc::InvalidArgument, "size must be in 1.." + std::to_string(kMaxChords));
  workers = resolve_workers(workers);
  const int m = 2 * n;
  std::vector<KeySet> parts(static_cast<std::size_t>(workers));
  // Work is split by the first image sigma(1); each part scans the rest in
  // lexicographic order.
  parallel_for(workers, n, [&](int w, int first) {
    KeySet& seen = parts[static_cast<std::size_t>(w)];
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != first + 1) rest.push_back(v);
    }
    Buffer partner{}, canon{};
    std::string key(static_cast<std::size_t>(m), '\0');
    do {
      auto image = [&](int i) { return i == 1 ? first + 1 : rest[static_cast<std::size_t>(i - 2)]; };
      for (int i = 1; i <= n; ++i) {
        const int odd = 2 * i - 1, even = 2 * image(i) - 2;
        partner[static_cast<std::size_t>(odd)] = static_cast<std::uint8_t>(even);
        partner[static_cast<std::size_t>(even)] = static_cast<std::uint8_t>(odd);
      }
      canonical_partner(partner.data(), m, canon.data());
      key.assign(canon.begin(), canon.begin() + m);
      seen.insert(key);
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return {n, StreamSource::PermutationScan, merge_sorted(parts, predicate)};
}

Lintel wheel(int n) {
  if (n < 1 || n > kMaxChords) throw GaussError(Errc::InvalidArgument, "wheel size must be in 1.." + std::to_string(kMaxChords));
  std::vector<Chord> chords;
  for (int i = 0; i < n; ++i) chords.push_back({i, n + i});
  return canonical_lintel(Lintel::from_chords(chords));
}

ArcKind classify_arc(const Lintel& l, int arc) {
  const int m = l.endpoints();
  if (arc < 0 || arc >= m) throw GaussError(Errc::IndexOutOfRange, "arc index " + std::to_string(arc));
  const int u = arc, v = (arc + 1) % m;
  if (l.partner(u) == v) {
    throw GaussError(Errc::SameChordArc, "arc " + std::to_string(arc) + " is bounded by a single chord");
  }
  return interlaces(l, l.chord_at(u), l.chord_at(v)) ? ArcKind::Cross : ArcKind::Parallel;
}

Lintel teepee_move(const Lintel& l, int chord, int arc) {
  check_move(l, chord, arc);
  Buffer out{};
  apply_teepee(l, chord, arc, out.data());
  return Lintel::from_partner(std::span<const std::uint8_t>(out.data(), static_cast<std::size_t>(l.endpoints() + 2)));
}

ArcKind teepee_move_kind(const Lintel& l, int chord, int arc) {
  check_move(l, chord, arc);
  Buffer out{};
  return apply_teepee(l, chord, arc, out.data());
}

Lintel reverse_teepee_move(const Lintel& l, int position) {
  const int m = l.endpoints();
  if (position < 0 || position >= m) throw GaussError(Errc::IndexOutOfRange, "position " + std::to_string(position));
  if (l.size() < 2) throw GaussError(Errc::InvalidArgument, "a reverse teepee move needs two chords");
  const int s = position, t = (position + 1) % m;
  if (l.partner(s) == t) {
    throw GaussError(Errc::SameChordArc, "positions " + std::to_string(s) + " and " + std::to_string(t) +
                                             " belong to one chord");
  }
  auto renumber = [&](int x) { return x - (x > s ? 1 : 0) - (x > t ? 1 : 0); };
  std::vector<Chord> chords;
  for (const Chord& c : l.chords()) {
    const bool hits_s = c.a == s || c.b == s, hits_t = c.a == t || c.b == t;
    if (hits_s || hits_t) continue;
    chords.push_back({renumber(c.a), renumber(c.b)});
  }
  const int x = renumber(l.partner(s)), y = renumber(l.partner(t));
  chords.push_back({std::min(x, y), std::max(x, y)});
  return Lintel::from_chords(chords);
}

std::vector<Lintel> teepee_children(const std::vector<Lintel>& parents, MoveKinds kinds, int workers) {
  if (parents.empty()) return {};
  workers = resolve_workers(workers);
  for (const Lintel& p : parents) check_move(p, 0, 0);
  std::vector<KeySet> parts(static_cast<std::size_t>(workers));
  parallel_for(workers, static_cast<int>(parents.size()), [&](int w, int item) {
    const Lintel& parent = parents[static_cast<std::size_t>(item)];
    const int m = parent.endpoints() + 2;
    KeySet& seen = parts[static_cast<std::size_t>(w)];
    Buffer child{}, canon{};
    std::string key(static_cast<std::size_t>(m), '\0');
    for (int c = 0; c < parent.size(); ++c) {
      for (int a = 0; a < parent.endpoints(); ++a) {
        const ArcKind kind = apply_teepee(parent, c, a, child.data());
        if ((kinds == MoveKinds::CrossOnly && kind != ArcKind::Cross) ||
            (kinds == MoveKinds::ParallelOnly && kind != ArcKind::Parallel)) {
          continue;
        }
        if (!connected(child.data(), m)) continue;
        canonical_partner(child.data(), m, canon.data());
        key.assign(canon.begin(), canon.begin() + m);
        seen.insert(key);
      }
    }
  });
  return merge_sorted(parts, {});
}

const std::vector<Lintel>& PrimeLadder::level(int n) {
  if (n < 1 || n > kMaxChords) throw GaussError(Errc::InvalidArgument, "size must be in 1.." + std::to_string(kMaxChords));
  if (auto it = levels_.find(n); it != levels_.end()) return it->second;
  std::vector<Lintel> out;
  if (n == 1) {
    out.push_back(Lintel::parse("0-1"));
  } else {
    out = teepee_children(level(n - 1), MoveKinds::Both, workers_);
    Lintel w = wheel(n);
    if (w.is_even_odd()) {
      auto pos = std::lower_bound(out.begin(), out.end(), w);
      if (pos == out.end() || *pos != w) out.insert(pos, std::move(w));
    }
  }
  return levels_.emplace(n, std::move(out)).first->second;
}

DiagramStream enumerate_prime(int n, int workers) {
  PrimeLadder ladder(workers);
  return {n, StreamSource::TeepeeIncremental, ladder.level(n)};
}

}  // namespace gauss
