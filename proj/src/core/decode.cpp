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

#include "decode.hpp"

#include <algorithm>

#include "clifford_sim.hpp"

namespace pq {

LinearDecoder::LinearDecoder(const ParityMapping& m, const ReadoutBasis& basis)
    : n_(m.n_logical), members_(basis.members) {
  const int rows = int(members_.size());
  require(rows >= 1 && rows <= 63, ErrorCode::InvalidArgument,
          "readout basis size out of supported range");

  // Augment the member-set system with one indicator column per member so
  // elimination yields each pivot logical bit as a mask over member bits.
  Gf2Matrix a(rows, n_ + rows);
  for (int r = 0; r < rows; ++r) {
    for (int v : m.physical_qubits[members_[r]]) a.set(r, v, true);
    a.set(r, n_ + r, true);
  }
  int rank = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < n_ && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (a.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.swap_rows(p, rank);
    for (int i = 0; i < rows; ++i)
      if (i != rank && a.get(i, c)) a.xor_row(i, rank);
    pivot_cols.push_back(c);
    ++rank;
  }
  require(rank == rows, ErrorCode::InvalidArgument,
          "readout basis members are GF(2) dependent");

  // Kernel of the member system over the logical space (dimension D).
  Gf2Matrix sys(rows, n_);
  for (int r = 0; r < rows; ++r)
    for (int v : m.physical_qubits[members_[r]]) sys.set(r, v, true);
  auto null_basis = gf2_nullspace(sys);
  require(int(null_basis.size()) == m.degeneracy, ErrorCode::InvalidArgument,
          "readout basis kernel does not match mapping degeneracy");
  kernel_ = null_basis.empty() ? BitString(n_) : null_basis[0];
  kernel_covers_bit0_ = kernel_.size() > 0 && kernel_.get(0);

  // Non-pivot logical bits are free and fixed to zero; pivot bits are read
  // off the indicator columns. Pivot rows in `a` are fully reduced, so row j
  // may still reference free columns; those contribute nothing at zero.
  logical_masks_.assign(n_, 0);
  for (int j = 0; j < rank; ++j) {
    uint64_t mask = 0;
    for (int r = 0; r < rows; ++r)
      if (a.get(j, n_ + r)) mask |= uint64_t{1} << r;
    logical_masks_[pivot_cols[j]] = mask;
  }
}

BitString LinearDecoder::decode(uint64_t member_bits) const {
  BitString s(n_);
  for (int v = 0; v < n_; ++v)
    if (std::popcount(logical_masks_[v] & member_bits) & 1) s.set(v, true);
  if (kernel_covers_bit0_ && s.get(0)) s ^= kernel_;
  return s;
}

BitString LinearDecoder::decode_min_energy(uint64_t member_bits, const Instance& inst) const {
  BitString s = decode(member_bits);
  if (!kernel_.any()) return s;
  BitString t = s;
  t ^= kernel_;
  const int64_t es = objective_value(inst, s), et = objective_value(inst, t);
  if (et < es) return t;
  return s;  // ties keep the canonical completion
}

uint64_t LinearDecoder::extract(const BitString& physical) const {
  uint64_t bits = 0;
  for (size_t j = 0; j < members_.size(); ++j)
    if (physical.get(members_[j])) bits |= uint64_t{1} << j;
  return bits;
}

uint64_t LinearDecoder::extract(uint64_t state_index) const {
  uint64_t bits = 0;
  for (size_t j = 0; j < members_.size(); ++j)
    if (state_index >> members_[j] & 1) bits |= uint64_t{1} << j;
  return bits;
}

BitString decode_basis(const ParityMapping& m, const ReadoutBasis& basis,
                       const BitString& physical, const Instance* inst) {
  require(physical.size() == m.num_qubits(), ErrorCode::InvalidArgument,
          "physical state length mismatch");
  LinearDecoder dec(m, basis);
  const uint64_t bits = dec.extract(physical);
  if (inst != nullptr && !inst->pairwise()) return dec.decode_min_energy(bits, *inst);
  return dec.decode(bits);
}

DecodeTables::DecodeTables(const Instance& inst, const ParityMapping& m,
                           const std::vector<ReadoutBasis>& bases) {
  require(!bases.empty(), ErrorCode::InvalidArgument, "need at least one readout basis");
  const bool spin_completion = !inst.pairwise();
  for (const auto& b : bases) {
    decoders.emplace_back(m, b);
    const auto& dec = decoders.back();
    const uint64_t patterns = uint64_t{1} << dec.members().size();
    std::vector<int32_t> table(patterns);
    for (uint64_t bits = 0; bits < patterns; ++bits) {
      const BitString s =
          spin_completion ? dec.decode_min_energy(bits, inst) : dec.decode(bits);
      table[bits] = int32_t(objective_value(inst, s));
    }
    energy.push_back(std::move(table));
  }
}

namespace {

// Shared accumulation over an outcome distribution.
template <typename OutcomeFn>
double accumulate_objective(const DecodeTables& tables, ObjectiveKind kind, OutcomeFn&& for_each) {
  const size_t nb = tables.decoders.size();
  if (kind == ObjectiveKind::Mean || kind == ObjectiveKind::Best) {
    // Expectation per basis first, then combine.
    std::vector<double> per_basis(nb, 0.0);
    double total = 0.0;
    for_each([&](uint64_t idx, double prob) {
      total += prob;
      for (size_t b = 0; b < nb; ++b)
        per_basis[b] += prob * tables.energy[b][tables.decoders[b].extract(idx)];
    });
    require(total > 0.0, ErrorCode::InvalidArgument, "empty outcome set");
    for (auto& e : per_basis) e /= total;
    if (kind == ObjectiveKind::Mean) {
      double s = 0.0;
      for (double e : per_basis) s += e;
      return s / double(nb);
    }
    return *std::min_element(per_basis.begin(), per_basis.end());
  }
  // BestPerShot: minimum over bases inside the expectation.
  double acc = 0.0, total = 0.0;
  for_each([&](uint64_t idx, double prob) {
    int64_t best = tables.energy[0][tables.decoders[0].extract(idx)];
    for (size_t b = 1; b < nb; ++b)
      best = std::min<int64_t>(best, tables.energy[b][tables.decoders[b].extract(idx)]);
    acc += prob * double(best);
    total += prob;
  });
  require(total > 0.0, ErrorCode::InvalidArgument, "empty outcome set");
  return acc / total;
}

}  // namespace

double objective_from_tables(const DecodeTables& tables, const StateVector& state,
                             ObjectiveKind kind) {
  require(state.width <= kExactObjectiveWidthGuard, ErrorCode::Guard,
          "exact objective enumeration guarded at K <= 22");
  return accumulate_objective(tables, kind, [&](auto&& visit) {
    for (uint64_t idx = 0; idx < state.amps.size(); ++idx) {
      const double p = std::norm(state.amps[idx]);
      if (p > 0.0) visit(idx, p);
    }
  });
}

double objective_from_tables(const DecodeTables& tables, const std::vector<BitString>& samples,
                             ObjectiveKind kind) {
  require(!samples.empty(), ErrorCode::InvalidArgument, "zero sample set");
  return accumulate_objective(tables, kind, [&](auto&& visit) {
    for (const auto& s : samples) visit(s.to_index(), 1.0);
  });
}

double objective_expectation(const Instance& inst, const ParityMapping& m,
                             const std::vector<ReadoutBasis>& bases, const StateVector& state,
                             ObjectiveKind kind) {
  require(state.width == m.num_qubits(), ErrorCode::InvalidArgument,
          "state width does not match mapping");
  DecodeTables tables(inst, m, bases);
  return objective_from_tables(tables, state, kind);
}

double objective_expectation(const Instance& inst, const ParityMapping& m,
                             const std::vector<ReadoutBasis>& bases,
                             const std::vector<BitString>& samples, ObjectiveKind kind) {
  require(m.num_qubits() <= 63, ErrorCode::Guard, "sampled decoding guarded at K <= 63");
  DecodeTables tables(inst, m, bases);
  return objective_from_tables(tables, samples, kind);
}

DecodedEnsemble decoded_ensemble(const Instance& inst, const ParityMapping& m,
                                 const std::vector<ReadoutBasis>& bases,
                                 const StateVector& state) {
  require(state.width == m.num_qubits(), ErrorCode::InvalidArgument,
          "state width does not match mapping");
  require(state.width <= kExactObjectiveWidthGuard, ErrorCode::Guard,
          "ensemble enumeration guarded at K <= 22");
  std::vector<LinearDecoder> decoders;
  for (const auto& b : bases) decoders.emplace_back(m, b);
  const bool spin_completion = !inst.pairwise();

  DecodedEnsemble out;
  for (uint64_t idx = 0; idx < state.amps.size(); ++idx) {
    const double p = std::norm(state.amps[idx]);
    if (p == 0.0) continue;
    DecodedEnsembleEntry e;
    e.physical = BitString::from_index(state.width, idx);
    e.probability = p;
    for (const auto& dec : decoders) {
      const uint64_t bits = dec.extract(idx);
      BitString s = spin_completion ? dec.decode_min_energy(bits, inst) : dec.decode(bits);
      e.energies.push_back(objective_value(inst, s));
      e.logical.push_back(std::move(s));
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool is_trivial(const Instance& inst, const ParityMapping& m,
                const std::vector<ReadoutBasis>& bases, int p) {
  return first_solve_depth(inst, m, bases, p) >= 0;
}

}  // namespace pq
