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

#include <optional>

#include "circuit.hpp"
#include "params.hpp"
#include "parity_map.hpp"
#include "problem.hpp"

namespace pq {

// Stabilizer tableau: K generator rows stored as packed X/Z bit masks with a
// sign bit. Rotation gates exp(-i theta P) act for theta = k*pi/4 via the
// conjugation rule R -> -+i P R on anticommuting rows, so no hand-entered
// gate table is involved.
class Tableau {
 public:
  explicit Tableau(int width);  // stabilizers of |0...0>

  int width() const { return width_; }

  void apply_h(int q);
  void apply_cnot(int c, int t);
  // exp(-i (k*pi/4) Z_q) and exp(-i (k*pi/4) X_q).
  void apply_rot_z(int q, int k);
  void apply_rot_x(int q, int k);
  // exp(-i (k*pi/4) Z_a Z_b).
  void apply_rot_zz(int a, int b, int k);

  void apply(const Circuit& c);

  bool x_free() const;  // every generator is a Z-string
  // Unique basis state when the tableau is diagonal; errors otherwise.
  BitString basis_state() const;
  // Bits whose Z observable is deterministic, solved from the Z-type
  // subgroup; entries are -1 where the outcome is random.
  std::vector<int> deterministic_bits() const;

 private:
  bool xbit(int r, int q) const { return (x_[size_t(r) * words_ + (q >> 6)] >> (q & 63)) & 1; }
  bool zbit(int r, int q) const { return (z_[size_t(r) * words_ + (q >> 6)] >> (q & 63)) & 1; }
  void flip_x(int r, int q) { x_[size_t(r) * words_ + (q >> 6)] ^= uint64_t{1} << (q & 63); }
  void flip_z(int r, int q) { z_[size_t(r) * words_ + (q >> 6)] ^= uint64_t{1} << (q & 63); }

  int width_;
  int words_;
  std::vector<uint64_t> x_, z_;
  std::vector<uint8_t> sign_;
};

// Simulates a circuit whose rotation angles are all multiples of pi/4.
Tableau clifford_simulate(const Circuit& c);

// All classical parameter vectors for up to p layers, ascending by exact
// depth, padded with zero layers; |result| = 2^(p+1).
std::vector<ParamVector> classical_vectors(int p);

// Runs the parity circuit for one classical vector and extracts the basis
// state; errors when the output is not a basis state.
BitString classical_state(const ParityMapping& m, const std::vector<int>& fields,
                          const ParamVector& vec);

// As above but only requires determinism on the requested qubits (mappings
// with zero-field ancillas leave those ancillas in superposition).
std::vector<int> classical_bits(const ParityMapping& m, const std::vector<int>& fields,
                                const ParamVector& vec);

enum class ObjectiveKind { Mean, Best, BestPerShot };
ObjectiveKind objective_kind_from_string(const std::string& s);
std::string objective_kind_to_string(ObjectiveKind k);

struct CliffordBound {
  double r0 = 0.0;          // ratio of the lowest objective of the requested kind
  double r0_mean = 0.0;     // ratio of the lowest mean objective
  double r0_best = 0.0;     // ratio of the lowest best objective
  bool solved = false;      // lowest decoded energy reached c_min
  int64_t best_energy = 0;  // lowest decoded energy over vectors and bases
  BitString best_logical;   // decoded assignment achieving best_energy
  int first_solve_depth = -1;
  // With kind=Best the scan stops once the optimum is certified, so r0_mean
  // then covers only the scanned prefix; call with kind=Mean for both.
};

// Decodes every classical-vector state with every basis and scores it.
// kind=Best permits early exit once the optimum is certified.
CliffordBound lower_bound(const Instance& inst, const ParityMapping& m,
                          const std::vector<ReadoutBasis>& bases, int p, ObjectiveKind kind);

// Smallest vector depth <= p_max whose best-basis decoding reaches c_min,
// or -1. The cheap core of the census and triviality checks.
int first_solve_depth(const Instance& inst, const ParityMapping& m,
                      const std::vector<ReadoutBasis>& bases, int p_max);

struct CensusRow {
  int p = 0;
  int64_t total_classes = 0;
  int64_t non_trivial = 0;
  double percent = 0.0;
  int64_t mirror_orbits = -1;  // complete mappings only
};

// Exhaustive sweep over all 2^L constraint-violation patterns: for each
// pattern a representative field vector is solved over GF(2) (ancillas get
// field 0) and classified by first_solve_depth against the best objective.
std::vector<CensusRow> constraint_pattern_census(const ParityMapping& m,
                                                 const std::vector<ReadoutBasis>& bases,
                                                 const std::vector<int>& p_list, int workers);

// Representative +-1 fields (0 on ancillas) whose local-field ground state
// violates exactly the given constraint pattern.
std::vector<int> census_representative_fields(const ParityMapping& m, uint64_t pattern);

}  // namespace pq
