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

#include "gauss/gf2.hpp"

#include <algorithm>
#include <numeric>

#include "gauss/error.hpp"

namespace gauss {

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw GaussError(Errc::InvalidArgument, "matrix rows must have length " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1) m.set(i, j);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

bool GF2Matrix::is_symmetric() const { return *this == transpose(); }

bool GF2Matrix::is_zero() const {
  return std::none_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.any(); });
}

GF2Matrix operator+(const GF2Matrix& x, const GF2Matrix& y) {
  if (x.n_ != y.n_) throw GaussError(Errc::SizeMismatch, "matrix sizes differ");
  GF2Matrix r = x;
  for (std::size_t i = 0; i < r.rows_.size(); ++i) r.rows_[i] ^= y.rows_[i];
  return r;
}

GF2Matrix operator*(const GF2Matrix& x, const GF2Matrix& y) {
  if (x.n_ != y.n_) throw GaussError(Errc::SizeMismatch, "matrix sizes differ");
  const GF2Matrix yt = y.transpose();
  GF2Matrix r(x.n_);
  for (int i = 0; i < x.n_; ++i) {
    for (int j = 0; j < x.n_; ++j) {
      if (dot(x.row(i), yt.row(j))) r.set(i, j);
    }
  }
  return r;
}

std::string GF2Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

GF2Matrix gf2_square(const GF2Matrix& m) { return m * m; }

bool Gf2System::add(const BitVector& coeffs, bool rhs) {
  if (!consistent_) return false;
  BitVector row(unknowns_ + 1);
  for (int i = 0; i < unknowns_; ++i) {
    if (coeffs.test(i)) row.set(i);
  }
  row.set(unknowns_, rhs);
  // Pivots are reduced in ascending order; each xor only touches columns >= pivot.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (row.test(pivot_[k])) row ^= rows_[k];
  }
  const int lead = row.lowest();
  if (lead < 0) return true;  // redundant
  if (lead == unknowns_) {
    consistent_ = false;
    return false;
  }
  auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), lead) - pivot_.begin();
  rows_.insert(rows_.begin() + pos, row);
  pivot_.insert(pivot_.begin() + pos, lead);
  return true;
}

bool Gf2System::add_pair(int i, int j, bool rhs) {
  BitVector c(unknowns_);
  c.flip(i);
  c.flip(j);
  return add(c, rhs);
}

BitVector Gf2System::back_substitute(const BitVector& free_values, bool homogeneous) const {
  BitVector x = free_values;
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const BitVector& r = rows_[k];
    bool v = homogeneous ? false : r.test(unknowns_);
    for (int c = pivot_[k] + 1; c < unknowns_; ++c) {
      if (r.test(c) && x.test(c)) v = !v;
    }
    x.set(pivot_[k], v);
  }
  return x;
}

std::optional<BitVector> Gf2System::solve() const {
  if (!consistent_) return std::nullopt;
  return back_substitute(BitVector(unknowns_), false);
}

std::vector<BitVector> Gf2System::nullspace() const {
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns_), false);
  for (int p : pivot_) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<BitVector> basis;
  for (int f = 0; f < unknowns_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitVector free_values(unknowns_);
    free_values.set(f);
    basis.push_back(back_substitute(free_values, true));
  }
  return basis;
}

}  // namespace gauss
