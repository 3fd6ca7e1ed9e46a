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

#include "bits.hpp"

namespace pq {

bool gf2_solve(const Gf2Matrix& m, const BitString& rhs, BitString* solution) {
  // Augmented elimination: one extra column carries the right-hand side.
  Gf2Matrix a(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) a.set(r, c, m.get(r, c));
    a.set(r, m.cols(), rhs.get(r));
  }
  int r = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (a.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.swap_rows(p, r);
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && a.get(i, c)) a.xor_row(i, r);
    pivot_cols.push_back(c);
    ++r;
  }
  for (int i = r; i < m.rows(); ++i)
    if (a.get(i, m.cols())) return false;  // 0 = 1 row
  BitString x(m.cols());
  for (int j = 0; j < r; ++j)
    if (a.get(j, m.cols())) x.set(pivot_cols[j], true);
  *solution = x;
  return true;
}

std::vector<BitString> gf2_nullspace(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  std::vector<int> pivot_cols;
  a.eliminate(&pivot_cols);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<BitString> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitString v(m.cols());
    v.set(f, true);
    // Back-substitute: pivot rows are already reduced, so row j reads
    // x[pivot_j] = sum of its free-column entries.
    for (size_t j = 0; j < pivot_cols.size(); ++j)
      if (a.get(int(j), f)) v.set(pivot_cols[j], true);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace pq
