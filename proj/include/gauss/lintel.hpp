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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gauss {

// Largest chord count any diagram may have. Keeps endpoint labels in a byte.
inline constexpr int kMaxChords = 64;

// One chord of a diagram, joining circle positions a and b.
struct Chord {
  int a = 0;
  int b = 0;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// A chord diagram on the circle positions 0..2n-1, held in sorted form:
// every chord has a < b and chords are ordered by their smaller endpoint.
// Chord index i always refers to the i-th chord of that sorted list.
//
// A Lintel may be any perfect matching. Gauss diagrams proper (even-odd
// matchings) are produced by validate_lintel and beta_map; is_even_odd()
// reports which kind a value is.
class Lintel {
 public:
  Lintel() = default;

  // Checks that the pairs partition 0..2n-1; parity is not checked.
  static Lintel from_chords(std::span<const Chord> chords);
  // partner[x] is the endpoint joined to x.
  static Lintel from_partner(std::span<const std::uint8_t> partner);
  // Parses "0-5,1-8,2-9"; whitespace around tokens is ignored.
  static Lintel parse(std::string_view text);
  // Inverse of key().
  static Lintel from_key(std::string_view key);

  int size() const noexcept { return static_cast<int>(chords_.size()); }
  int endpoints() const noexcept { return 2 * size(); }

  const std::vector<Chord>& chords() const noexcept { return chords_; }
  const Chord& chord(int i) const { return chords_.at(static_cast<std::size_t>(i)); }
  int partner(int x) const { return partner_.at(static_cast<std::size_t>(x)); }
  // Index of the chord having endpoint x.
  int chord_at(int x) const;
  std::span<const std::uint8_t> partners() const noexcept { return partner_; }

  bool is_even_odd() const noexcept;

  std::string to_text() const;
  // Compact binary key (the partner array); equal keys iff equal lintels.
  std::string key() const;

  friend bool operator==(const Lintel& x, const Lintel& y) { return x.chords_ == y.chords_; }
  friend std::strong_ordering operator<=>(const Lintel& x, const Lintel& y) {
    return x.chords_ <=> y.chords_;
  }

 private:
  std::vector<Chord> chords_;
  std::vector<std::uint8_t> partner_;
};

// A word in which every letter 1..n occurs exactly twice.
class GaussWord {
 public:
  GaussWord() = default;
  explicit GaussWord(std::vector<int> letters);  // validates

  // Whitespace separated positive integers, e.g. "1 2 3 3 4 1 2 4".
  // A run of single digits without separators ("12334124") is also accepted.
  static GaussWord parse(std::string_view text);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()) / 2; }
  std::string to_text() const;

  friend bool operator==(const GaussWord&, const GaussWord&) = default;

 private:
  std::vector<int> letters_;
};

// Accepts pairs that partition 0..2n-1 with one even and one odd value each.
Lintel validate_lintel(std::span<const Chord> raw);

// sigma is given by its images sigma(1..n), one-based.
Lintel beta_map(std::span<const int> sigma);

// Image of l under x -> (invert ? 2n - x : x) + shift (mod 2n), re-sorted.
Lintel transform(const Lintel& l, int shift, bool invert);

// Lexicographically least sorted lintel over the 4n rotations/reflections.
Lintel canonical_lintel(const Lintel& l);
bool is_canonical(const Lintel& l);
bool are_equivalent(const Lintel& a, const Lintel& b);

// Writes the canonical partner array of the diagram given by partner[0..m).
// Both buffers hold m = 2n entries. Used by the generators' hot loops.
void canonical_partner(const std::uint8_t* partner, int m, std::uint8_t* out);

Lintel to_lintel(const GaussWord& word);
// Letters are numbered by chord index + 1.
GaussWord to_gauss_word(const Lintel& l);

struct LintelHash {
  std::size_t operator()(const Lintel& l) const noexcept {
    return std::hash<std::string>{}(l.key());
  }
};

}  // namespace gauss
