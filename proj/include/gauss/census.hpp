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

#include <cstddef>
#include <string>
#include <vector>

#include "gauss/circle_graph.hpp"
#include "gauss/generation.hpp"

namespace gauss {

inline constexpr int kMaxCensusVertices = 16;

struct CanonicalGraphLabel {
  int n = 0;
  // Edges (i < j) under the canonical numbering, sorted.
  std::vector<Edge> edges;
  // n, then the upper triangle packed row-major into bytes.
  std::string key;

  friend bool operator==(const CanonicalGraphLabel&, const CanonicalGraphLabel&) = default;
};

// Equal labels iff the graphs are isomorphic.
CanonicalGraphLabel canonical_graph_label(const CircleGraph& g);

// Number of distinct interlacement graphs (up to isomorphism) among the
// diagrams accepted by `filter`; an empty filter accepts all.
std::size_t count_nonisomorphic(const DiagramStream& diagrams, const LintelPredicate& filter = {}, int workers = 0);

}  // namespace gauss
