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

// Test-only oracles, deliberately independent of the library's simulation
// paths: full-matrix kron construction for unitaries and a plain 2^n scan
// for extrema.

#pragma once

#include <complex>
#include <vector>

#include "core/parity_map.hpp"
#include "core/problem.hpp"

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = std::vector<std::vector<cd>>;

inline Mat identity(size_t d) {
  Mat m(d, std::vector<cd>(d, 0));
  for (size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t da = a.size(), db = b.size();
  Mat m(da * db, std::vector<cd>(da * db, 0));
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      for (size_t k = 0; k < db; ++k)
        for (size_t l = 0; l < db; ++l) m[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const size_t d = a.size();
  Mat m(d, std::vector<cd>(d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (a[i][k] == cd{0, 0}) continue;
      for (size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

inline Vec mul(const Mat& a, const Vec& v) {
  Vec out(v.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

// Embeds a one-qubit operator at qubit q (qubit 0 = least significant bit),
// so the full matrix is I x ... x U x ... x I with U at slot q from the right.
inline Mat embed_single(int n, int q, const Mat& u) {
  Mat m = q == 0 ? u : identity(2);
  for (int k = 1; k < n; ++k) m = kron(k == q ? u : identity(2), m);
  return m;
}

inline Mat rx_matrix(double theta) {
  const double h = theta / 2;
  return {{cd{std::cos(h), 0}, cd{0, -std::sin(h)}}, {cd{0, -std::sin(h)}, cd{std::cos(h), 0}}};
}

inline Mat rz_matrix(double theta) {
  return {{std::polar(1.0, -theta / 2), 0}, {cd{0, 0}, std::polar(1.0, theta / 2)}};
}

inline Mat h_matrix() {
  const double s = 1 / std::sqrt(2.0);
  return {{cd{s, 0}, cd{s, 0}}, {cd{s, 0}, cd{-s, 0}}};
}

inline Mat cnot_matrix(int n, int control, int target) {
  const size_t d = size_t{1} << n;
  Mat m(d, std::vector<cd>(d, 0));
  for (size_t x = 0; x < d; ++x) {
    size_t y = x;
    if (x >> control & 1) y ^= size_t{1} << target;
    m[y][x] = 1;
  }
  return m;
}

inline Vec plus_state(int n) {
  const size_t d = size_t{1} << n;
  return Vec(d, cd{1.0 / std::sqrt(double(d)), 0});
}

// exp(-i angle * Z-string) as a diagonal.
inline Vec zstring_phase_diag(int n, const std::vector<int>& qubits, double angle) {
  const size_t d = size_t{1} << n;
  Vec diag(d);
  for (size_t x = 0; x < d; ++x) {
    int par = 0;
    for (int q : qubits) par ^= int(x >> q & 1);
    diag[x] = std::polar(1.0, par ? angle : -angle);
  }
  return diag;
}

inline void apply_diag(Vec& v, const Vec& diag) {
  for (size_t i = 0; i < v.size(); ++i) v[i] *= diag[i];
}

// Ideal vanilla QAOA state in logical qubit order.
inline Vec vanilla_ideal_state(const pq::Instance& inst, const std::vector<double>& gammas,
                               const std::vector<double>& betas) {
  Vec v = plus_state(inst.n);
  for (size_t layer = 0; layer < gammas.size(); ++layer) {
    for (const auto& e : inst.edges)
      apply_diag(v, zstring_phase_diag(inst.n, e.vertices, gammas[layer] * e.weight));
    for (int q = 0; q < inst.n; ++q)
      v = mul(embed_single(inst.n, q, rx_matrix(2 * betas[layer])), v);
  }
  return v;
}

// Ideal parity QAOA state.
inline Vec parity_ideal_state(const pq::ParityMapping& m, const std::vector<int>& fields,
                              const std::vector<double>& gammas,
                              const std::vector<double>& omegas,
                              const std::vector<double>& betas) {
  const int k = m.num_qubits();
  Vec v = plus_state(k);
  for (size_t layer = 0; layer < gammas.size(); ++layer) {
    for (int q = 0; q < k; ++q)
      if (fields[q] != 0)
        apply_diag(v, zstring_phase_diag(k, {q}, gammas[layer] * fields[q]));
    for (const auto& c : m.constraints)
      apply_diag(v, zstring_phase_diag(k, c.members, omegas[layer] * c.sign));
    for (int q = 0; q < k; ++q) v = mul(embed_single(k, q, rx_matrix(2 * betas[layer])), v);
  }
  return v;
}

inline double fidelity(const Vec& a, const Vec& b) {
  cd acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::abs(acc);
}

// Reorders a position-indexed state into logical order given
// final_permutation[logical] = position.
inline Vec reorder_from_positions(const Vec& state, const std::vector<int>& perm) {
  const int n = int(perm.size());
  Vec out(state.size());
  for (size_t x = 0; x < out.size(); ++x) {
    size_t y = 0;
    for (int i = 0; i < n; ++i)
      if (x >> i & 1) y |= size_t{1} << perm[i];
    out[x] = state[y];
  }
  return out;
}

// Plain full-space extrema scan; no representative shortcut.
struct SimpleExtrema {
  int64_t c_min = 0, c_max = 0;
  std::vector<uint64_t> minimizers;
};

inline int64_t simple_energy(const pq::Instance& inst, uint64_t s) {
  int64_t acc = 0;
  for (const auto& e : inst.edges) {
    int par = 0;
    for (int v : e.vertices) par ^= int(s >> v & 1);
    if (inst.convention == pq::EnergyConvention::Cut)
      acc -= int64_t(e.weight) * par;
    else
      acc += par ? -int64_t(e.weight) : int64_t(e.weight);
  }
  return acc;
}

inline SimpleExtrema simple_extrema(const pq::Instance& inst) {
  SimpleExtrema ex;
  bool first = true;
  for (uint64_t s = 0; s < (uint64_t{1} << inst.n); ++s) {
    const int64_t v = simple_energy(inst, s);
    if (first || v < ex.c_min) {
      ex.c_min = v;
      ex.minimizers.clear();
    }
    if (v == ex.c_min) ex.minimizers.push_back(s);
    if (first || v > ex.c_max) ex.c_max = v;
    first = false;
  }
  return ex;
}

}  // namespace oracle
