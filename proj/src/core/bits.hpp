// Copyright 2026 The pqaoa developers
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
#include <string>
#include <vector>

#include "error.hpp"

namespace pq {

// Fixed-length bit string. Bit i is qubit/vertex i; in amplitude indices
// qubit 0 is the least significant bit.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitString from_index(int n, uint64_t idx) {
    BitString b(n);
    if (n > 0) b.w_[0] = (n >= 64) ? idx : (idx & ((uint64_t{1} << n) - 1));
    return b;
  }

  int size() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void operator^=(const BitString& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }

  // Parity of the AND with another bit string of equal length.
  bool parity_and(const BitString& mask) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & mask.w_[k];
    return std::popcount(acc) & 1;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // Lowest index usable as an amplitude index (requires n <= 64).
  uint64_t to_index() const {
    require(n_ <= 64, ErrorCode::InvalidArgument, "bit string too wide for index");
    return w_.empty() ? 0 : w_[0];
  }

  bool operator==(const BitString& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitString& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Dense GF(2) matrix with 64-bit packed rows; used for constraint rank
// checks, readout-basis decoding and the census field solver.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(size_t(rows) * stride_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (w_[size_t(r) * stride_ + (c >> 6)] >> (c & 63)) & 1; }
  void set(int r, int c, bool v) {
    uint64_t m = uint64_t{1} << (c & 63);
    size_t k = size_t(r) * stride_ + (c >> 6);
    if (v)
      w_[k] |= m;
    else
      w_[k] &= ~m;
  }

  void xor_row(int dst, int src) {
    uint64_t* d = &w_[size_t(dst) * stride_];
    const uint64_t* s = &w_[size_t(src) * stride_];
    for (int k = 0; k < stride_; ++k) d[k] ^= s[k];
  }

  void set_row(int r, const BitString& b) {
    for (int c = 0; c < cols_; ++c) set(r, c, b.get(c));
  }

  BitString row(int r) const {
    BitString b(cols_);
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) b.set(c, true);
    return b;
  }

  int rank() const {
    Gf2Matrix m = *this;
    return m.eliminate();
  }

  // In-place forward elimination; returns the rank and records pivot columns.
  int eliminate(std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (get(i, c)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r) swap_rows(p, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && get(i, c)) xor_row(i, r);
      if (pivot_cols) pivot_cols->push_back(c);
      ++r;
    }
    return r;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int k = 0; k < stride_; ++k)
      std::swap(w_[size_t(a) * stride_ + k], w_[size_t(b) * stride_ + k]);
  }

 private:
  int rows_, cols_, stride_;
  std::vector<uint64_t> w_;
};

// Solves M x = rhs over GF(2). Free variables are fixed to zero, which makes
// the particular solution deterministic. Returns false when inconsistent.
bool gf2_solve(const Gf2Matrix& m, const BitString& rhs, BitString* solution);

// Basis of the nullspace {x : M x = 0}.
std::vector<BitString> gf2_nullspace(const Gf2Matrix& m);

}  // namespace pq
