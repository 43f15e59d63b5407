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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gauss {

// Packed bit vector; bit i lives in word i / 64.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  int size() const noexcept { return size_; }

  bool test(int i) const noexcept { return (words_[word(i)] >> (i & 63)) & 1U; }
  void set(int i, bool value = true) noexcept {
    if (value) {
      words_[word(i)] |= bit(i);
    } else {
      words_[word(i)] &= ~bit(i);
    }
  }
  void flip(int i) noexcept { words_[word(i)] ^= bit(i); }

  BitVector& operator^=(const BitVector& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  // Index of the lowest set bit, or -1.
  int lowest() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    }
    return -1;
  }

  // popcount(x & y); the inner product over the integers.
  friend int and_count(const BitVector& x, const BitVector& y) noexcept {
    int c = 0;
    for (std::size_t k = 0; k < x.words_.size(); ++k) c += std::popcount(x.words_[k] & y.words_[k]);
    return c;
  }
  // <x, y> over GF(2).
  friend bool dot(const BitVector& x, const BitVector& y) noexcept { return and_count(x, y) & 1; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  static std::size_t word(int i) noexcept { return static_cast<std::size_t>(i) >> 6; }
  static std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << (i & 63); }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square matrix over GF(2) stored as packed rows.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(int n) : n_(n), rows_(static_cast<std::size_t>(n), BitVector(n)) {}

  static GF2Matrix identity(int n);
  // rows[i][j] != 0 sets entry (i, j).
  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  bool get(int i, int j) const noexcept { return rows_[static_cast<std::size_t>(i)].test(j); }
  void set(int i, int j, bool value = true) noexcept { rows_[static_cast<std::size_t>(i)].set(j, value); }
  void flip(int i, int j) noexcept { rows_[static_cast<std::size_t>(i)].flip(j); }
  const BitVector& row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }

  // <m_i, m_j> over GF(2).
  bool row_dot(int i, int j) const noexcept { return dot(row(i), row(j)); }

  GF2Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend GF2Matrix operator+(const GF2Matrix& x, const GF2Matrix& y);
  friend GF2Matrix operator*(const GF2Matrix& x, const GF2Matrix& y);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  // One line per row, entries as '0'/'1' separated by spaces.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<BitVector> rows_;
};

// M * M. For symmetric M entry (i, j) is <m_i, m_j>.
GF2Matrix gf2_square(const GF2Matrix& m);

// Linear system over GF(2) in a fixed number of unknowns, solved by
// incremental elimination. Each stored row keeps its pivot as lowest set bit.
class Gf2System {
 public:
  explicit Gf2System(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const noexcept { return unknowns_; }

  // Adds sum_{i in coeffs} x_i = rhs. Returns false if the system has
  // become inconsistent; later calls keep returning false.
  bool add(const BitVector& coeffs, bool rhs);
  // Adds x_i + x_j = rhs.
  bool add_pair(int i, int j, bool rhs);

  bool consistent() const noexcept { return consistent_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  // Solution with every free unknown set to 0; nullopt when inconsistent.
  std::optional<BitVector> solve() const;
  // Basis of the homogeneous solution space.
  std::vector<BitVector> nullspace() const;

 private:
  BitVector back_substitute(const BitVector& free_values, bool homogeneous) const;

  int unknowns_;
  bool consistent_ = true;
  // Bit `unknowns_` of each row is the right-hand side.
  std::vector<BitVector> rows_;
  std::vector<int> pivot_;
};

}  // namespace gauss
