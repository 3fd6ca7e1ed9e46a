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

#include <cstdint>
#include <vector>

#include "dense_sim.hpp"
#include "parity_map.hpp"
#include "problem.hpp"

namespace pq {

enum class ObjectiveKind;  // clifford_sim.hpp

// Precomputed GF(2) solve for one readout basis: each logical bit is the
// parity of a fixed mask over the basis member bits; the kernel vector spans
// the D=1 completion freedom.
class LinearDecoder {
 public:
  LinearDecoder(const ParityMapping& m, const ReadoutBasis& basis);

  const std::vector<int>& members() const { return members_; }

  // Canonical completion: free solution bits are zero and, when the kernel
  // covers logical bit 0, the completion with bit 0 = 0 is returned.
  BitString decode(uint64_t member_bits) const;
  // Lower-energy completion for spin instances (ties resolved canonically).
  BitString decode_min_energy(uint64_t member_bits, const Instance& inst) const;

  uint64_t extract(const BitString& physical) const;
  uint64_t extract(uint64_t state_index) const;

  // Member-position mask whose parity gives the decoded product z_i z_j;
  // completion-independent whenever the kernel weight is even on {i, j}
  // (always true for connected pairwise mappings).
  uint64_t pair_mask(int i, int j) const { return logical_masks_[i] ^ logical_masks_[j]; }

  const BitString& kernel() const { return kernel_; }

 private:
  int n_;
  std::vector<int> members_;
  std::vector<uint64_t> logical_masks_;  // per logical bit, over member positions
  BitString kernel_;
  bool kernel_covers_bit0_ = false;
};

// Solves the readout system for one measured physical state. When `inst` is
// given and the instance has three-vertex edges, the lower-energy completion
// is chosen; otherwise the canonical completion applies.
BitString decode_basis(const ParityMapping& m, const ReadoutBasis& basis,
                       const BitString& physical, const Instance* inst = nullptr);

// Per-basis decoded-energy lookup tables; energy depends only on the basis
// member bits, so tables have 2^(N-D) entries regardless of K.
struct DecodeTables {
  std::vector<LinearDecoder> decoders;
  std::vector<std::vector<int32_t>> energy;  // [basis][member pattern]

  DecodeTables(const Instance& inst, const ParityMapping& m,
               const std::vector<ReadoutBasis>& bases);

  int64_t basis_energy(size_t basis, const BitString& physical) const {
    return energy[basis][decoders[basis].extract(physical)];
  }
};

// Objective evaluation against prebuilt tables (the hot path inside
// optimization loops).
double objective_from_tables(const DecodeTables& tables, const StateVector& state,
                             ObjectiveKind kind);
double objective_from_tables(const DecodeTables& tables, const std::vector<BitString>& samples,
                             ObjectiveKind kind);

struct DecodedEnsembleEntry {
  BitString physical;
  double probability = 0.0;
  std::vector<BitString> logical;  // per basis
  std::vector<int64_t> energies;   // per basis
};

using DecodedEnsemble = std::vector<DecodedEnsembleEntry>;

// Exact decoded objective: mean averages the per-basis expected energy,
// best takes the minimum over bases of the per-basis expected energy, and
// best-per-shot averages the per-outcome minimum (a flagged estimator
// variant; the per-basis expectation is taken first in the other two).
double objective_expectation(const Instance& inst, const ParityMapping& m,
                             const std::vector<ReadoutBasis>& bases, const StateVector& state,
                             ObjectiveKind kind);

// Empirical-frequency variant over measured shots.
double objective_expectation(const Instance& inst, const ParityMapping& m,
                             const std::vector<ReadoutBasis>& bases,
                             const std::vector<BitString>& samples, ObjectiveKind kind);

// Full outcome-by-outcome decoding (debugging / small K).
DecodedEnsemble decoded_ensemble(const Instance& inst, const ParityMapping& m,
                                 const std::vector<ReadoutBasis>& bases,
                                 const StateVector& state);

// True when classical-state decoding alone already solves the instance.
bool is_trivial(const Instance& inst, const ParityMapping& m,
                const std::vector<ReadoutBasis>& bases, int p);

inline constexpr int kExactObjectiveWidthGuard = 22;

}  // namespace pq
