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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "problem.hpp"

namespace pq {

// A plaquette constraint: the Z-product over `members` equals +1 on every
// encoded state (members' parity sets XOR to the empty set). `sign` scales
// the plaquette rotation in circuits; bundled mappings always use +1.
struct Constraint {
  std::vector<int> members;  // 3 or 4 distinct physical-qubit indices
  int sign = 1;
};

struct ReadoutBasis {
  std::vector<int> members;  // n_logical - D physical qubits, GF(2)-independent
  int logical_line = -1;     // >= 0 when this is the logical line of that index
};

// Parity encoding of a (hyper)graph problem: each physical qubit carries the
// parity of a set of logical qubits; plaquette constraints pin the physical
// configuration space to the image of the logical space.
struct ParityMapping {
  int n_logical = 0;
  std::vector<std::vector<int>> physical_qubits;  // sorted logical sets, size >= 2
  std::vector<bool> ancilla;                      // per physical qubit
  std::vector<Constraint> constraints;
  std::vector<ReadoutBasis> readout_bases;
  int degeneracy = 1;  // D >= 1
  std::vector<std::array<int, 2>> positions;  // optional grid coordinates
  std::string provenance;                     // "paper_layout" | "reconstructed"

  int num_qubits() const { return int(physical_qubits.size()); }
  int num_constraints() const { return int(constraints.size()); }
  // Index of the physical qubit with this exact logical set, or -1.
  int qubit_index(const std::vector<int>& logical_set) const;
  // Parity-set incidence vectors as a (K x n_logical) GF(2) matrix.
  Gf2Matrix qubit_matrix() const;
};

// Full invariant check: ranks, constraint independence, L = K - N + D,
// decodability of every readout basis. Throws on violation.
void validate_mapping(const ParityMapping& m);

// LHZ staircase encoding of the complete graph on n >= 3 vertices:
// K = n(n-1)/2 qubits, L = (n-1)(n-2)/2 plaquettes (3-body on the boundary),
// readout bases = the n logical lines.
ParityMapping encode_complete(int n);

// The n logical-line spanning trees of a complete-graph mapping.
std::vector<ReadoutBasis> logical_lines(const ParityMapping& m);

// Deterministic cycle-basis search over the GF(2) nullspace of the parity
// sets; returns K - n + D independent constraints of size 3 or 4. Fails when
// no basis of short cycles exists.
std::vector<Constraint> find_constraints(int n_logical,
                                         const std::vector<std::vector<int>>& physical_qubits);

// Greedy deterministic search for M distinct readout bases (ancillas are
// never used for readout).
std::vector<ReadoutBasis> find_readout_bases(const ParityMapping& m, int count, uint64_t seed);

// Local fields: the matching edge weight per interaction qubit, 0 on
// ancillas. With allow_missing, interaction qubits without a matching edge
// also get 0 (used when re-encoding reduced problems with dropped edges).
std::vector<int> physical_fields(const Instance& inst, const ParityMapping& m,
                                 bool allow_missing = false);

// q~_nu = XOR of the logical bits in qubit nu's parity set.
BitString encode_logical_state(const ParityMapping& m, const BitString& logical);

// Average number of readout bases covering a physical qubit: M(N-1)/K.
double tree_coverage(const ParityMapping& m, int num_bases);

std::string mapping_to_json(const ParityMapping& m);
ParityMapping mapping_from_json(const std::string& json_text);

// Bundled benchmark mappings (reconstructed constraint sets; the 4-regular
// readout trees are the eight published spanning trees).
ParityMapping fig3_mapping();
ParityMapping fig9_mapping();

// The eight spanning trees bundled with the 4-regular graph, as edge lists.
const std::vector<std::vector<std::vector<int>>>& fig3_spanning_trees();

}  // namespace pq
