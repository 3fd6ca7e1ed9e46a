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

#include "clifford_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "decode.hpp"

namespace pq {

Tableau::Tableau(int width) : width_(width), words_((width + 63) / 64) {
  require(width >= 1, ErrorCode::InvalidArgument, "tableau needs width >= 1");
  x_.assign(size_t(width) * words_, 0);
  z_.assign(size_t(width) * words_, 0);
  sign_.assign(width, 0);
  for (int r = 0; r < width; ++r) flip_z(r, r);  // |0...0> is stabilized by {Z_q}
}

void Tableau::apply_h(int q) {
  for (int r = 0; r < width_; ++r) {
    const bool x = xbit(r, q), z = zbit(r, q);
    if (x != z) {
      flip_x(r, q);
      flip_z(r, q);
    }
    sign_[r] ^= uint8_t(x & z);
  }
}

void Tableau::apply_cnot(int c, int t) {
  for (int r = 0; r < width_; ++r) {
    const bool xc = xbit(r, c), zc = zbit(r, c);
    const bool xt = xbit(r, t), zt = zbit(r, t);
    sign_[r] ^= uint8_t(xc & zt & (xt ^ zc ^ 1));
    if (xc) flip_x(r, t);
    if (zt) flip_z(r, c);
  }
}

void Tableau::apply_rot_z(int q, int k) {
  k = ((k % 8) + 8) % 8;
  if (k == 0 || k == 4) return;
  for (int r = 0; r < width_; ++r) {
    if (!xbit(r, q)) continue;
    if (k == 2 || k == 6) {
      sign_[r] ^= 1;
    } else {
      const bool z = zbit(r, q);
      // R -> -i Z_q R for k in {1,5}, +i Z_q R for k in {3,7}.
      sign_[r] ^= uint8_t((k == 1 || k == 5) ? z : !z);
      flip_z(r, q);
    }
  }
}

void Tableau::apply_rot_x(int q, int k) {
  k = ((k % 8) + 8) % 8;
  if (k == 0 || k == 4) return;
  for (int r = 0; r < width_; ++r) {
    if (!zbit(r, q)) continue;
    if (k == 2 || k == 6) {
      sign_[r] ^= 1;
    } else {
      const bool x = xbit(r, q);
      sign_[r] ^= uint8_t((k == 1 || k == 5) ? !x : x);
      flip_x(r, q);
    }
  }
}

void Tableau::apply_rot_zz(int a, int b, int k) {
  k = ((k % 8) + 8) % 8;
  if (k == 0 || k == 4) return;
  for (int r = 0; r < width_; ++r) {
    const bool anti = xbit(r, a) ^ xbit(r, b);
    if (!anti) continue;
    if (k == 2 || k == 6) {
      sign_[r] ^= 1;
      continue;
    }
    // Phase of (Z_a Z_b) * R restricted to qubits a, b: per qubit
    // g(Z; x,z) = x(1 - 2z).
    int e = 0;
    for (int q : {a, b}) {
      if (xbit(r, q)) e += zbit(r, q) ? -1 : 1;
      flip_z(r, q);
    }
    e += (k == 1 || k == 5) ? 3 : 1;
    e = ((e % 4) + 4) % 4;
    require(e == 0 || e == 2, ErrorCode::Runtime, "rotation produced a non-Hermitian row");
    sign_[r] ^= uint8_t(e == 2);
  }
}

static int clifford_k(double angle_half) {
  const double unit = M_PI / 4;
  const double ratio = angle_half / unit;
  const long long k = llround(ratio);
  require(std::abs(ratio - double(k)) < 1e-9, ErrorCode::InvalidArgument,
          "rotation angle is not a multiple of pi/4; not a Clifford gate");
  return int(((k % 8) + 8) % 8);
}

void Tableau::apply(const Circuit& c) {
  require(c.width == width_, ErrorCode::InvalidArgument, "circuit width mismatch");
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: apply_h(g.q0); break;
      case GateKind::CNOT: apply_cnot(g.q0, g.q1); break;
      case GateKind::RZ:
      case GateKind::PlaquetteRZ: apply_rot_z(g.q0, clifford_k(g.angle / 2)); break;
      case GateKind::RX: apply_rot_x(g.q0, clifford_k(g.angle / 2)); break;
      case GateKind::PauliX: apply_rot_x(g.q0, 2); break;
      case GateKind::PauliZ: apply_rot_z(g.q0, 2); break;
      case GateKind::PauliY:
        apply_rot_z(g.q0, 2);
        apply_rot_x(g.q0, 2);
        break;
      case GateKind::ZZ: apply_rot_zz(g.q0, g.q1, clifford_k(g.angle / 2)); break;
    }
  }
}

bool Tableau::x_free() const {
  for (uint64_t w : x_)
    if (w) return false;
  return true;
}

namespace {

// Z-string rows with signs; solve (-1)^{b . mask} = (-1)^{sign} for the bits
// b that are determined. Returns -1 per undetermined qubit.
std::vector<int> solve_z_rows(int width, std::vector<std::pair<BitString, int>> rows) {
  // Reduced echelon over the z-masks, signs carried along.
  std::vector<std::pair<BitString, int>> echelon;
  std::vector<int> pivots;
  for (auto& [mask, s] : rows) {
    for (size_t r = 0; r < echelon.size(); ++r)
      if (mask.get(pivots[r])) {
        mask ^= echelon[r].first;
        s ^= echelon[r].second;
      }
    if (!mask.any()) continue;
    int piv = 0;
    while (!mask.get(piv)) ++piv;
    // Keep reduced form against earlier rows.
    for (size_t r = 0; r < echelon.size(); ++r)
      if (echelon[r].first.get(piv)) {
        echelon[r].first ^= mask;
        echelon[r].second ^= s;
      }
    echelon.push_back({mask, s});
    pivots.push_back(piv);
  }
  std::vector<int> bits(width, -1);
  for (int q = 0; q < width; ++q) {
    BitString v(width);
    v.set(q, true);
    int acc = 0;
    for (size_t r = 0; r < echelon.size(); ++r)
      if (v.get(pivots[r])) {
        v ^= echelon[r].first;
        acc ^= echelon[r].second;
      }
    if (!v.any()) bits[q] = acc;
  }
  return bits;
}

}  // namespace

BitString Tableau::basis_state() const {
  require(x_free(), ErrorCode::NotBasisState,
          "stabilizer output is not a computational basis state");
  std::vector<std::pair<BitString, int>> rows;
  for (int r = 0; r < width_; ++r) {
    BitString mask(width_);
    for (int q = 0; q < width_; ++q)
      if (zbit(r, q)) mask.set(q, true);
    rows.push_back({mask, sign_[r]});
  }
  auto bits = solve_z_rows(width_, std::move(rows));
  BitString out(width_);
  for (int q = 0; q < width_; ++q) {
    require(bits[q] >= 0, ErrorCode::NotBasisState, "basis state is underdetermined");
    if (bits[q]) out.set(q, true);
  }
  return out;
}

std::vector<int> Tableau::deterministic_bits() const {
  // Combinations of generators with vanishing X part form the Z-type
  // subgroup; their signs pin the deterministic measurement outcomes.
  Gf2Matrix xt(width_, width_);
  for (int r = 0; r < width_; ++r)
    for (int q = 0; q < width_; ++q)
      if (xbit(r, q)) xt.set(q, r, true);  // transpose: columns are rows
  auto combos = gf2_nullspace(xt);

  std::vector<std::pair<BitString, int>> rows;
  for (const auto& combo : combos) {
    // Multiply the selected generator rows, accumulating the i-exponent.
    BitString px(width_), pz(width_);
    int e_total = 0;
    for (int i = 0; i < width_; ++i) {
      if (!combo.get(i)) continue;
      int e = 0;
      for (int q = 0; q < width_; ++q) {
        const int xa = px.get(q), za = pz.get(q);
        const int xb = xbit(i, q), zb = zbit(i, q);
        e += xa * za + xb * zb + 2 * za * xb - (xa ^ xb) * (za ^ zb);
      }
      e_total = ((e_total + e) % 4 + 4) % 4;
      e_total = (e_total + 2 * sign_[i]) % 4;
      for (int q = 0; q < width_; ++q) {
        if (xbit(i, q)) px.flip(q);
        if (zbit(i, q)) pz.flip(q);
      }
    }
    require(!px.any(), ErrorCode::Runtime, "x-free combination has X support");
    require(e_total == 0 || e_total == 2, ErrorCode::Runtime, "non-Hermitian group element");
    rows.push_back({pz, e_total == 2 ? 1 : 0});
  }
  return solve_z_rows(width_, std::move(rows));
}

Tableau clifford_simulate(const Circuit& c) {
  Tableau t(c.width);
  t.apply(c);
  return t;
}

std::vector<ParamVector> classical_vectors(int p) {
  require(p >= 1, ErrorCode::InvalidArgument, "classical vectors need p >= 1");
  const double g4 = M_PI / 4, g2 = M_PI / 2;
  std::vector<ParamVector> out;

  auto pad = [p](ParamVector v) {
    while (v.layers() < p) {
      v.gammas.push_back(0);
      v.omegas.push_back(0);
      v.betas.push_back(0);
    }
    return v;
  };

  // Depth 1: the four explicit vectors.
  for (auto [g, o] : {std::pair{g4, 0.0}, {g4, g2}, {-g4, 0.0}, {-g4, g2}})
    out.push_back(pad(ParamVector{{g}, {o}, {g4}}));

  // Depth q >= 2: fixed head, then per-layer binary slots (gamma before
  // omega, layers ascending). Empty middle ranges at q = 2, 3 realise the
  // skipped descending-index rows.
  for (int q = 2; q <= p; ++q) {
    struct Slot {
      int layer;
      bool is_gamma;
      double opt0, opt1;
    };
    ParamVector base;
    base.gammas.assign(q, 0.0);
    base.omegas.assign(q, 0.0);
    base.betas.assign(q, g4);
    std::vector<Slot> slots;
    if (q % 2 == 0) {
      for (int l = 1; l <= (q - 2) / 2; ++l) base.omegas[l - 1] = g4;
      base.omegas[q / 2 - 1] = g4;
      base.betas[q / 2 - 1] = g2;
      for (int l = q / 2 + 1; l <= q - 1; ++l) {
        slots.push_back({l, true, 0.0, g2});
        slots.push_back({l, false, g4, -g4});
      }
    } else {
      for (int l = 1; l <= (q - 1) / 2; ++l) base.omegas[l - 1] = g4;
      const int mid = (q + 1) / 2;
      base.omegas[mid - 1] = g2;
      slots.push_back({mid, true, 0.0, g2});
      for (int l = mid + 1; l <= q - 1; ++l) {
        slots.push_back({l, true, 0.0, g2});
        slots.push_back({l, false, g4, -g4});
      }
    }
    slots.push_back({q, true, g4, -g4});
    slots.push_back({q, false, g4, -g4});

    for (uint64_t sel = 0; sel < (uint64_t{1} << slots.size()); ++sel) {
      ParamVector v = base;
      for (size_t s = 0; s < slots.size(); ++s) {
        const double val = (sel >> s & 1) ? slots[s].opt1 : slots[s].opt0;
        if (slots[s].is_gamma)
          v.gammas[slots[s].layer - 1] = val;
        else
          v.omegas[slots[s].layer - 1] = val;
      }
      out.push_back(pad(std::move(v)));
    }
  }
  return out;
}

BitString classical_state(const ParityMapping& m, const std::vector<int>& fields,
                          const ParamVector& vec) {
  const int depth = vec.exact_depth();
  require(depth >= 1, ErrorCode::InvalidArgument, "parameter vector is all zeros");
  const Circuit c = build_parity_circuit(m, fields, vec.truncated(depth));
  return clifford_simulate(c).basis_state();
}

std::vector<int> classical_bits(const ParityMapping& m, const std::vector<int>& fields,
                                const ParamVector& vec) {
  const int depth = vec.exact_depth();
  require(depth >= 1, ErrorCode::InvalidArgument, "parameter vector is all zeros");
  const Circuit c = build_parity_circuit(m, fields, vec.truncated(depth));
  Tableau t = clifford_simulate(c);
  if (t.x_free()) {
    const BitString b = t.basis_state();
    std::vector<int> bits(m.num_qubits());
    for (int q = 0; q < m.num_qubits(); ++q) bits[q] = b.get(q);
    return bits;
  }
  return t.deterministic_bits();
}

ObjectiveKind objective_kind_from_string(const std::string& s) {
  if (s == "mean") return ObjectiveKind::Mean;
  if (s == "best") return ObjectiveKind::Best;
  if (s == "best_per_shot" || s == "best-per-shot") return ObjectiveKind::BestPerShot;
  fail(ErrorCode::InvalidArgument, "unknown objective kind: " + s);
}

std::string objective_kind_to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::Mean: return "mean";
    case ObjectiveKind::Best: return "best";
    case ObjectiveKind::BestPerShot: return "best_per_shot";
  }
  return "?";
}

namespace {

// Shared machinery for lower_bound, first_solve_depth and the census.
struct BoundContext {
  const ParityMapping* m;
  std::vector<LinearDecoder> decoders;
  std::vector<BitString> member_masks;  // per basis, over physical qubits
  std::vector<ParamVector> vectors;     // ascending exact depth
  std::vector<int> depths;

  BoundContext(const ParityMapping& mapping, const std::vector<ReadoutBasis>& bases, int p) {
    require(p >= 1, ErrorCode::InvalidArgument, "lower bound needs p >= 1");
    require(!bases.empty(), ErrorCode::InvalidArgument, "need at least one readout basis");
    m = &mapping;
    for (const auto& b : bases) {
      decoders.emplace_back(mapping, b);
      BitString mask(mapping.num_qubits());
      for (int q : b.members) mask.set(q, true);
      member_masks.push_back(std::move(mask));
    }
    vectors = classical_vectors(p);
    for (const auto& v : vectors) depths.push_back(v.exact_depth());
  }

  // Physical bits needed for decoding, taken from the deterministic part of
  // the stabilizer output.
  BitString decode_state(const std::vector<int>& fields, const ParamVector& vec) const {
    const auto bits = classical_bits(*m, fields, vec);
    BitString phys(m->num_qubits());
    for (size_t b = 0; b < decoders.size(); ++b)
      for (int q : decoders[b].members()) {
        require(bits[q] >= 0, ErrorCode::NotBasisState,
                "readout qubit has a non-deterministic outcome");
        if (bits[q]) phys.set(q, true);
      }
    return phys;
  }
};

}  // namespace

CliffordBound lower_bound(const Instance& inst, const ParityMapping& m,
                          const std::vector<ReadoutBasis>& bases, int p, ObjectiveKind kind) {
  require(kind != ObjectiveKind::BestPerShot, ErrorCode::InvalidArgument,
          "lower bound supports the mean and best objectives");
  const Extrema ex = brute_force_extrema(inst);
  const auto fields = physical_fields(inst, m);
  const bool spin_completion = !inst.pairwise();
  BoundContext ctx(m, bases, p);

  CliffordBound out;
  bool first = true;
  double min_mean = 0.0, min_best = 0.0;
  for (size_t vi = 0; vi < ctx.vectors.size(); ++vi) {
    const BitString phys = ctx.decode_state(fields, ctx.vectors[vi]);
    double mean_acc = 0.0;
    int64_t best_acc = 0;
    for (size_t b = 0; b < ctx.decoders.size(); ++b) {
      const uint64_t bits = ctx.decoders[b].extract(phys);
      const BitString logical = spin_completion
                                    ? ctx.decoders[b].decode_min_energy(bits, inst)
                                    : ctx.decoders[b].decode(bits);
      const int64_t e = objective_value(inst, logical);
      mean_acc += double(e);
      if (b == 0 || e < best_acc) best_acc = e;
      if (first || e < out.best_energy) {
        out.best_energy = e;
        out.best_logical = logical;
        first = false;
      }
    }
    mean_acc /= double(ctx.decoders.size());
    if (vi == 0 || mean_acc < min_mean) min_mean = mean_acc;
    if (vi == 0 || double(best_acc) < min_best) min_best = double(best_acc);
    if (out.first_solve_depth < 0 && out.best_energy == ex.c_min)
      out.first_solve_depth = ctx.depths[vi];
    if (kind == ObjectiveKind::Best && out.first_solve_depth >= 0) break;  // optimum certified
  }
  out.solved = out.best_energy == ex.c_min;
  out.r0_mean = approximation_ratio(ex, min_mean);
  out.r0_best = approximation_ratio(ex, min_best);
  out.r0 = kind == ObjectiveKind::Mean ? out.r0_mean : out.r0_best;
  return out;
}

int first_solve_depth(const Instance& inst, const ParityMapping& m,
                      const std::vector<ReadoutBasis>& bases, int p_max) {
  const Extrema ex = brute_force_extrema(inst);
  const auto fields = physical_fields(inst, m);
  const bool spin_completion = !inst.pairwise();
  BoundContext ctx(m, bases, p_max);
  for (size_t vi = 0; vi < ctx.vectors.size(); ++vi) {
    const BitString phys = ctx.decode_state(fields, ctx.vectors[vi]);
    for (size_t b = 0; b < ctx.decoders.size(); ++b) {
      const uint64_t bits = ctx.decoders[b].extract(phys);
      const BitString logical = spin_completion
                                    ? ctx.decoders[b].decode_min_energy(bits, inst)
                                    : ctx.decoders[b].decode(bits);
      if (objective_value(inst, logical) == ex.c_min) return ctx.depths[vi];
    }
  }
  return -1;
}

namespace {

// Pattern -> representative-field solver over the non-ancilla columns.
struct CensusSolver {
  std::vector<int> columns;            // non-ancilla qubit per column
  std::vector<int> pivot_qubits;       // qubit receiving pattern mask j
  std::vector<uint64_t> pivot_masks;   // mask over the L pattern bits
  int L = 0;

  explicit CensusSolver(const ParityMapping& m) {
    L = m.num_constraints();
    require(L >= 1 && L <= 62, ErrorCode::Guard, "census guarded at L <= 62 constraints");
    for (int q = 0; q < m.num_qubits(); ++q)
      if (!m.ancilla[q]) columns.push_back(q);
    const int nc = int(columns.size());
    std::vector<int> col_of(m.num_qubits(), -1);
    for (int c = 0; c < nc; ++c) col_of[columns[c]] = c;

    // [A' | I_L]: eliminate to express pivot variables as masks over the
    // pattern bits.
    Gf2Matrix a(L, nc + L);
    for (int l = 0; l < L; ++l) {
      for (int q : m.constraints[l].members)
        if (col_of[q] >= 0) a.set(l, col_of[q], true);
      a.set(l, nc + l, true);
    }
    int rank = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < nc && rank < L; ++c) {
      int p = -1;
      for (int i = rank; i < L; ++i)
        if (a.get(i, c)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      a.swap_rows(p, rank);
      for (int i = 0; i < L; ++i)
        if (i != rank && a.get(i, c)) a.xor_row(i, rank);
      pivot_cols.push_back(c);
      ++rank;
    }
    require(rank == L, ErrorCode::Runtime,
            "constraint system is not surjective onto violation patterns");
    for (int j = 0; j < L; ++j) {
      uint64_t mask = 0;
      for (int l = 0; l < L; ++l)
        if (a.get(j, nc + l)) mask |= uint64_t{1} << l;
      pivot_qubits.push_back(columns[pivot_cols[j]]);
      pivot_masks.push_back(mask);
    }
  }

  std::vector<int> fields(const ParityMapping& m, uint64_t pattern) const {
    std::vector<int> f(m.num_qubits(), 0);
    for (int q : columns) f[q] = -1;  // x = 0 -> field -1
    for (int j = 0; j < L; ++j)
      if (std::popcount(pivot_masks[j] & pattern) & 1) f[pivot_qubits[j]] = 1;
    return f;
  }
};

// Constraint permutation induced by the LHZ triangle mirror, when defined.
std::vector<int> mirror_constraint_permutation(const ParityMapping& m) {
  const int n = m.n_logical;
  if (m.num_qubits() != n * (n - 1) / 2) return {};
  std::map<std::vector<int>, int> qubit_of;
  for (int q = 0; q < m.num_qubits(); ++q) qubit_of[m.physical_qubits[q]] = q;
  std::vector<int> qmirror(m.num_qubits(), -1);
  for (int q = 0; q < m.num_qubits(); ++q) {
    const auto& s = m.physical_qubits[q];
    if (s.size() != 2) return {};
    std::vector<int> t = {n - 1 - s[1], n - 1 - s[0]};
    std::sort(t.begin(), t.end());
    auto it = qubit_of.find(t);
    if (it == qubit_of.end()) return {};
    qmirror[q] = it->second;
  }
  std::map<std::vector<int>, int> constraint_of;
  for (int l = 0; l < m.num_constraints(); ++l) {
    auto mem = m.constraints[l].members;
    std::sort(mem.begin(), mem.end());
    constraint_of[mem] = l;
  }
  std::vector<int> perm(m.num_constraints(), -1);
  for (int l = 0; l < m.num_constraints(); ++l) {
    std::vector<int> mem;
    for (int q : m.constraints[l].members) mem.push_back(qmirror[q]);
    std::sort(mem.begin(), mem.end());
    auto it = constraint_of.find(mem);
    if (it == constraint_of.end()) return {};
    perm[l] = it->second;
  }
  return perm;
}

}  // namespace

std::vector<int> census_representative_fields(const ParityMapping& m, uint64_t pattern) {
  CensusSolver solver(m);
  return solver.fields(m, pattern);
}

std::vector<CensusRow> constraint_pattern_census(const ParityMapping& m,
                                                 const std::vector<ReadoutBasis>& bases,
                                                 const std::vector<int>& p_list, int workers) {
  require(!p_list.empty(), ErrorCode::InvalidArgument, "census needs at least one p");
  const int p_max = *std::max_element(p_list.begin(), p_list.end());
  CensusSolver solver(m);
  const uint64_t total = uint64_t{1} << solver.L;

  // Instance template over the interaction qubits.
  Instance templ;
  templ.n = m.n_logical;
  for (int q = 0; q < m.num_qubits(); ++q)
    if (!m.ancilla[q]) templ.edges.push_back({m.physical_qubits[q], 1});
  templ.label = "census";
  templ.convention = templ.pairwise() ? EnergyConvention::Cut : EnergyConvention::Spin;

  std::vector<int8_t> fsd(total, -1);
  const int nworkers = std::max(1, workers);
  auto work = [&](uint64_t begin, uint64_t end) {
    BoundContext ctx(m, bases, p_max);
    Instance inst = templ;
    for (uint64_t pattern = begin; pattern < end; ++pattern) {
      const auto fields = solver.fields(m, pattern);
      size_t ei = 0;
      for (int q = 0; q < m.num_qubits(); ++q)
        if (!m.ancilla[q]) inst.edges[ei++].weight = fields[q];
      const Extrema ex = brute_force_extrema(inst);
      const bool spin_completion = !inst.pairwise();
      int depth = -1;
      for (size_t vi = 0; vi < ctx.vectors.size() && depth < 0; ++vi) {
        const BitString phys = ctx.decode_state(fields, ctx.vectors[vi]);
        for (size_t b = 0; b < ctx.decoders.size(); ++b) {
          const uint64_t bits = ctx.decoders[b].extract(phys);
          const BitString logical = spin_completion
                                        ? ctx.decoders[b].decode_min_energy(bits, inst)
                                        : ctx.decoders[b].decode(bits);
          if (objective_value(inst, logical) == ex.c_min) {
            depth = ctx.depths[vi];
            break;
          }
        }
      }
      fsd[pattern] = int8_t(depth);
    }
  };
  if (nworkers == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (total + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const uint64_t b = uint64_t(w) * chunk, e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  const auto mirror = mirror_constraint_permutation(m);
  auto mirror_pattern = [&](uint64_t b) {
    uint64_t out = 0;
    for (int l = 0; l < solver.L; ++l)
      if (b >> l & 1) out |= uint64_t{1} << mirror[l];
    return out;
  };

  std::vector<CensusRow> rows;
  for (int p : p_list) {
    CensusRow row;
    row.p = p;
    row.total_classes = int64_t(total);
    std::vector<uint64_t> nontrivial;
    for (uint64_t b = 0; b < total; ++b)
      if (fsd[b] < 0 || fsd[b] > p) nontrivial.push_back(b);
    row.non_trivial = int64_t(nontrivial.size());
    row.percent = 100.0 * double(row.non_trivial) / double(total);
    if (!mirror.empty()) {
      std::vector<uint64_t> canon;
      for (uint64_t b : nontrivial) canon.push_back(std::min(b, mirror_pattern(b)));
      std::sort(canon.begin(), canon.end());
      canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
      row.mirror_orbits = int64_t(canon.size());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pq
