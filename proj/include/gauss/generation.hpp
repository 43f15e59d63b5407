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

#include <functional>
#include <map>
#include <vector>

#include "gauss/lintel.hpp"

namespace gauss {

enum class ArcKind { Cross, Parallel };

enum class StreamSource { PermutationScan, TeepeeIncremental };

// One canonical lintel per equivalence class, sorted ascending.
struct DiagramStream {
  int size = 0;
  StreamSource source = StreamSource::PermutationScan;
  std::vector<Lintel> diagrams;
};

using LintelPredicate = std::function<bool(const Lintel&)>;

// Scans all n! permutations through beta_map and canonical_lintel. The
// predicate (if any) sees each class once, as its canonical lintel.
// workers <= 0 means resolve_workers(0).
DiagramStream enumerate_all(int n, const LintelPredicate& predicate = {}, int workers = 0);

// Chords (i, n + i); canonical. Only odd n gives an even-odd matching.
Lintel wheel(int n);

// Arc i runs from position i to position i + 1 (mod 2n).
ArcKind classify_arc(const Lintel& l, int arc);

// Replaces chord `chord` by two chords ending at two new positions inserted
// into arc `arc`; of the two ways to reconnect, the one keeping the diagram
// an even-odd matching is taken. The new positions are arc + 1 and arc + 2.
Lintel teepee_move(const Lintel& l, int chord, int arc);

// Kind of the arc between the two positions a teepee move inserts.
ArcKind teepee_move_kind(const Lintel& l, int chord, int arc);

// Removes positions p and p + 1 (mod 2n) and joins their partners.
Lintel reverse_teepee_move(const Lintel& l, int position);

enum class MoveKinds { Both, CrossOnly, ParallelOnly };

// All prime canonical results of teepee moves (of the given kinds) applied to
// every chord and arc of every parent; sorted, deduplicated.
std::vector<Lintel> teepee_children(const std::vector<Lintel>& parents, MoveKinds kinds = MoveKinds::Both,
                                    int workers = 0);

// Prime even-odd diagrams level by level, each built from the one below it.
// Level 1 is the single chord and level 2 is empty.
class PrimeLadder {
 public:
  explicit PrimeLadder(int workers = 0) : workers_(workers) {}

  const std::vector<Lintel>& level(int n);

 private:
  int workers_;
  std::map<int, std::vector<Lintel>> levels_;
};

DiagramStream enumerate_prime(int n, int workers = 0);

}  // namespace gauss
