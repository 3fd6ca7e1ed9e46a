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

#include <complex>
#include <vector>

#include "circuit.hpp"

namespace pq {

// Exact statevector over at most kDenseWidthGuard qubits. Qubit 0 is the
// least significant amplitude-index bit.
inline constexpr int kDenseWidthGuard = 26;

struct StateVector {
  int width = 0;
  std::vector<std::complex<double>> amps;

  double norm_sq() const;
};

StateVector simulate(const Circuit& c);

// I.i.d. computational-basis draws from |amp|^2; deterministic in the seed.
std::vector<BitString> sample(const StateVector& s, int shots, uint64_t seed);

// <prod_{q in support} Z_q> on the given state.
double expectation_zstring(const StateVector& s, const std::vector<int>& support);

// Exact p=1 Z-string expectation evaluated on the causal cone of the
// support: the support qubits plus every member of a constraint touching
// them. Diagonal rotations outside the cone commute with the observable and
// are dropped; the result equals the full-width expectation.
double lightcone_zstring_expectation(const ParityMapping& m, const std::vector<int>& fields,
                                     double gamma, double omega, double beta,
                                     const std::vector<int>& support);

// Same quantity through the closed-form character sum over plaquette
// subsets; exact for any cone size and O(2^|S| * 2^{#touching constraints}).
// Used in p=1 optimization loops where the mapping exceeds the dense guard.
double p1_zstring_expectation(const ParityMapping& m, const std::vector<int>& fields,
                              double gamma, double omega, double beta,
                              const std::vector<int>& support);

}  // namespace pq
