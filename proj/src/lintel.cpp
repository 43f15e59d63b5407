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

#include "gauss/lintel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "gauss/error.hpp"

namespace gauss {
namespace {

int parse_int(std::string_view token, std::string_view context) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw GaussError(Errc::ParseError,
                     "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

void check_chord_count(std::size_t n) {
  if (n == 0) throw GaussError(Errc::InvalidArgument, "a diagram needs at least one chord");
  if (n > static_cast<std::size_t>(kMaxChords)) {
    throw GaussError(Errc::InvalidArgument,
                     "at most " + std::to_string(kMaxChords) + " chords are supported");
  }
}

}  // namespace

Lintel Lintel::from_chords(std::span<const Chord> chords) {
  check_chord_count(chords.size());
  const int m = 2 * static_cast<int>(chords.size());
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  bool out_of_range = false;
  for (const Chord& c : chords) {
    if (c.a == c.b) {
      throw GaussError(Errc::DuplicateEndpoint,
                       "endpoint " + std::to_string(c.a) + " is joined to itself");
    }
    for (int x : {c.a, c.b}) {
      if (x < 0 || x >= m) {
        out_of_range = true;
        continue;
      }
      if (seen[static_cast<std::size_t>(x)]++) {
        throw GaussError(Errc::DuplicateEndpoint, "endpoint " + std::to_string(x) + " used twice");
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      throw GaussError(Errc::MissingEndpoint, "endpoint " + std::to_string(x) + " is missing");
    }
  }
  if (out_of_range) throw GaussError(Errc::MissingEndpoint, "endpoint outside 0..2n-1");

  std::vector<std::uint8_t> partner(static_cast<std::size_t>(m));
  for (const Chord& c : chords) {
    partner[static_cast<std::size_t>(c.a)] = static_cast<std::uint8_t>(c.b);
    partner[static_cast<std::size_t>(c.b)] = static_cast<std::uint8_t>(c.a);
  }
  return from_partner(partner);
}

Lintel Lintel::from_partner(std::span<const std::uint8_t> partner) {
  const std::size_t m = partner.size();
  if (m % 2 != 0) throw GaussError(Errc::InvalidArgument, "odd number of endpoints");
  check_chord_count(m / 2);
  Lintel l;
  l.partner_.assign(partner.begin(), partner.end());
  l.chords_.reserve(m / 2);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t y = partner[x];
    if (y >= m || y == x || partner[y] != x) {
      throw GaussError(Errc::InvalidArgument, "partner array is not a perfect matching");
    }
    if (y > x) l.chords_.push_back({static_cast<int>(x), static_cast<int>(y)});
  }
  return l;
}

Lintel Lintel::parse(std::string_view text) {
  std::vector<Chord> chords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    const std::size_t dash = token.find('-');
    if (dash == std::string_view::npos) {
      throw GaussError(Errc::ParseError, "expected 'a-b' but got '" + std::string(token) + "'");
    }
    chords.push_back({parse_int(token.substr(0, dash), text), parse_int(token.substr(dash + 1), text)});
    start = comma + 1;
  }
  return from_chords(chords);
}

Lintel Lintel::from_key(std::string_view key) {
  std::vector<std::uint8_t> partner(key.begin(), key.end());
  return from_partner(partner);
}

int Lintel::chord_at(int x) const {
  const int y = partner(x);
  const int lo = std::min(x, y);
  auto it = std::lower_bound(chords_.begin(), chords_.end(), lo,
                             [](const Chord& c, int v) { return c.a < v; });
  return static_cast<int>(it - chords_.begin());
}

bool Lintel::is_even_odd() const noexcept {
  return std::all_of(chords_.begin(), chords_.end(),
                     [](const Chord& c) { return (c.a + c.b) % 2 == 1; });
}

std::string Lintel::to_text() const {
  std::string out;
  for (const Chord& c : chords_) {
    if (!out.empty()) out += ',';
    out += std::to_string(c.a);
    out += '-';
    out += std::to_string(c.b);
  }
  return out;
}

std::string Lintel::key() const { return std::string(partner_.begin(), partner_.end()); }

GaussWord::GaussWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() % 2 != 0) {
    throw GaussError(Errc::LetterCountViolation, "a Gauss word has even positive length");
  }
  const int n = static_cast<int>(letters_.size() / 2);
  check_chord_count(static_cast<std::size_t>(n));
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int c : letters_) {
    if (c < 1 || c > n) {
      throw GaussError(Errc::LetterCountViolation,
                       "letter " + std::to_string(c) + " outside 1.." + std::to_string(n));
    }
    ++count[static_cast<std::size_t>(c)];
  }
  for (int c = 1; c <= n; ++c) {
    if (count[static_cast<std::size_t>(c)] != 2) {
      throw GaussError(Errc::LetterCountViolation,
                       "letter " + std::to_string(c) + " occurs " +
                           std::to_string(count[static_cast<std::size_t>(c)]) + " times");
    }
  }
}

GaussWord GaussWord::parse(std::string_view text) {
  std::vector<int> letters;
  const bool has_space = std::any_of(text.begin(), text.end(),
                                     [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!has_space) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw GaussError(Errc::ParseError, "bad Gauss word '" + std::string(text) + "'");
      }
      letters.push_back(ch - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) letters.push_back(parse_int(text.substr(i, j - i), text));
      i = j;
    }
  }
  return GaussWord(std::move(letters));
}

std::string GaussWord::to_text() const {
  std::string out;
  for (int c : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

Lintel validate_lintel(std::span<const Chord> raw) {
  Lintel l = Lintel::from_chords(raw);
  for (const Chord& c : l.chords()) {
    if ((c.a + c.b) % 2 == 0) {
      throw GaussError(Errc::ParityViolation,
                       "chord " + std::to_string(c.a) + "-" + std::to_string(c.b) +
                           " joins two values of the same parity");
    }
  }
  return l;
}

Lintel beta_map(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) throw GaussError(Errc::NotAPermutation, "empty permutation");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) {
      throw GaussError(Errc::NotAPermutation, "not a permutation of 1.." + std::to_string(n));
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Chord> chords;
  chords.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int odd = 2 * i - 1;
    const int even = 2 * sigma[static_cast<std::size_t>(i - 1)] - 2;
    chords.push_back({std::min(odd, even), std::max(odd, even)});
  }
  return Lintel::from_chords(chords);
}

Lintel transform(const Lintel& l, int shift, bool invert) {
  const int m = l.endpoints();
  shift = ((shift % m) + m) % m;
  auto f = [&](int x) { return ((invert ? m - x : x) + shift) % m; };
  std::vector<std::uint8_t> q(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) q[static_cast<std::size_t>(f(x))] = static_cast<std::uint8_t>(f(l.partner(x)));
  return Lintel::from_partner(q);
}

void canonical_partner(const std::uint8_t* p, int m, std::uint8_t* out) {
  // best holds the flattened sorted lintel (a1,b1,a2,b2,...) of the least image so far.
  std::array<std::uint8_t, 2 * kMaxChords> best{};
  bool have_best = false;
  for (int inv = 0; inv < 2; ++inv) {
    for (int s = 0; s < m; ++s) {
      enum { kEqual, kLess } state = have_best ? kEqual : kLess;
      bool greater = false;
      int k = 0;
      for (int y = 0; y < m && !greater; ++y) {
        int x = inv ? s - y : y - s;
        if (x < 0) x += m;
        const int px = p[x];
        int z = (inv ? m - px : px) + s;
        if (z >= m) z -= m;
        if (z < y) continue;
        if (state == kEqual) {
          if (y != best[static_cast<std::size_t>(k)]) {
            if (y > best[static_cast<std::size_t>(k)]) { greater = true; break; }
            state = kLess;
          } else if (z != best[static_cast<std::size_t>(k) + 1]) {
            if (z > best[static_cast<std::size_t>(k) + 1]) { greater = true; break; }
            state = kLess;
          }
        }
        if (state == kLess) {
          best[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(y);
          best[static_cast<std::size_t>(k) + 1] = static_cast<std::uint8_t>(z);
        }
        k += 2;
      }
      if (!greater) have_best = true;
    }
  }
  for (int k = 0; k < m; k += 2) {
    out[best[static_cast<std::size_t>(k)]] = best[static_cast<std::size_t>(k) + 1];
    out[best[static_cast<std::size_t>(k) + 1]] = best[static_cast<std::size_t>(k)];
  }
}

Lintel canonical_lintel(const Lintel& l) {
  std::array<std::uint8_t, 2 * kMaxChords> out{};
  const int m = l.endpoints();
  canonical_partner(l.partners().data(), m, out.data());
  return Lintel::from_partner(std::span<const std::uint8_t>(out.data(), static_cast<std::size_t>(m)));
}

bool is_canonical(const Lintel& l) { return canonical_lintel(l) == l; }

bool are_equivalent(const Lintel& a, const Lintel& b) {
  if (a.size() != b.size()) {
    throw GaussError(Errc::SizeMismatch, "diagrams of sizes " + std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
  return canonical_lintel(a) == canonical_lintel(b);
}

Lintel to_lintel(const GaussWord& word) {
  const auto& letters = word.letters();
  std::vector<int> first(static_cast<std::size_t>(word.size()) + 1, -1);
  std::vector<Chord> chords;
  for (int pos = 0; pos < static_cast<int>(letters.size()); ++pos) {
    int& f = first[static_cast<std::size_t>(letters[static_cast<std::size_t>(pos)])];
    if (f < 0) {
      f = pos;
    } else {
      chords.push_back({f, pos});
    }
  }
  return Lintel::from_chords(chords);
}

GaussWord to_gauss_word(const Lintel& l) {
  std::vector<int> letters(static_cast<std::size_t>(l.endpoints()));
  for (int i = 0; i < l.size(); ++i) {
    letters[static_cast<std::size_t>(l.chord(i).a)] = i + 1;
    letters[static_cast<std::size_t>(l.chord(i).b)] = i + 1;
  }
  return GaussWord(std::move(letters));
}

}  // namespace gauss
