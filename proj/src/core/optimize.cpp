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

#include "optimize.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace pq {

MetropolisResult metropolis_optimize(const std::function<double(const std::vector<double>&)>& f,
                                     int dim, const OptimizerConfig& cfg) {
  cfg.check();
  require(dim >= 1, ErrorCode::InvalidArgument, "objective needs at least one parameter");

  MetropolisResult res;
  bool have_best = false;
  const uint64_t base = derive_seed(cfg.seed, stream::kOptimizerRestart);
  for (int restart = 0; restart < cfg.n_init; ++restart) {
    Rng rng(derive_seed(base, uint64_t(restart)));
    std::vector<double> cur(dim);
    for (auto& x : cur) x = rng.next_double(-M_PI / 2, M_PI / 2);
    double c_cur = f(cur);
    double restart_best = c_cur;
    if (!have_best || c_cur < res.best_value) {
      res.best_value = c_cur;
      res.best_params = cur;
      have_best = true;
    }
    std::vector<double> prop = cur;
    for (int step = 0; step < cfg.n_mc; ++step) {
      const int coord = int(rng.next_below(uint64_t(dim)));
      prop = cur;
      prop[coord] += rng.next_double(-cfg.step_halfwidth, cfg.step_halfwidth);
      const double c_new = f(prop);
      if (c_new < restart_best) restart_best = c_new;
      if (c_new < res.best_value) {
        res.best_value = c_new;
        res.best_params = prop;
      }
      // v is drawn unconditionally to keep the stream position independent
      // of acceptance.
      const double v = rng.next_double();
      if (v < std::exp((c_cur - c_new) / cfg.temperature)) {
        cur = prop;
        c_cur = c_new;
      }
    }
    res.restart_best.push_back(restart_best);
  }
  return res;
}

namespace {

// Energy of every computational-basis state, indexed by wire pattern after
// the final permutation.
std::vector<int32_t> permuted_energy_table(const Instance& inst,
                                           const std::vector<int>& final_permutation) {
  const int n = inst.n;
  require(n <= kExactObjectiveWidthGuard, ErrorCode::Guard,
          "exact vanilla objective guarded at n <= 22");
  struct Packed {
    uint32_t mask;
    int w;
  };
  std::vector<Packed> packed;
  for (const auto& e : inst.edges) {
    uint32_t m = 0;
    for (int v : e.vertices) m |= uint32_t{1} << final_permutation[v];
    packed.push_back({m, e.weight});
  }
  const bool cut = inst.convention == EnergyConvention::Cut;
  std::vector<int32_t> table(uint64_t{1} << n);
  for (uint64_t x = 0; x < table.size(); ++x) {
    int64_t v = 0;
    if (cut) {
      for (const auto& p : packed) v -= int64_t(p.w) * (std::popcount(uint32_t(x) & p.mask) & 1);
    } else {
      for (const auto& p : packed)
        v += (std::popcount(uint32_t(x) & p.mask) & 1) ? -int64_t(p.w) : int64_t(p.w);
    }
    table[x] = int32_t(v);
  }
  return table;
}

ParamVector vanilla_params(const std::vector<double>& v, int p) {
  ParamVector pv;
  pv.gammas.assign(v.begin(), v.begin() + p);
  pv.betas.assign(v.begin() + p, v.begin() + 2 * p);
  return pv;
}

ParamVector parity_params(const std::vector<double>& v, int p) {
  ParamVector pv;
  pv.gammas.assign(v.begin(), v.begin() + p);
  pv.omegas.assign(v.begin() + p, v.begin() + 2 * p);
  pv.betas.assign(v.begin() + 2 * p, v.begin() + 3 * p);
  return pv;
}

}  // namespace

QaoaResult run_vanilla_qaoa(const Instance& inst, int p, const OptimizerConfig& cfg) {
  cfg.check();
  require(p >= 1, ErrorCode::InvalidArgument, "QAOA needs p >= 1");
  const Extrema ex = brute_force_extrema(inst);
  const bool exact = cfg.shots == 0;
  int copies = 1;
  if (!exact) {
    copies = cfg.copies > 0
                 ? cfg.copies
                 : int((inst.edges.size() + inst.n - 1) / size_t(inst.n));  // ceil(K/N)
    copies = std::max(copies, 1);
  }

  // The permutation depends only on n and p, not the angles.
  ParamVector zero;
  zero.gammas.assign(p, 0.0);
  zero.betas.assign(p, 0.0);
  const Circuit shape = build_vanilla_circuit(inst, zero);
  const auto table = permuted_energy_table(inst, shape.final_permutation);

  uint64_t eval_counter = 0;
  const uint64_t sample_base = derive_seed(cfg.seed, stream::kSampling);
  auto objective = [&](const std::vector<double>& v) {
    const ParamVector pv = vanilla_params(v, p);
    const StateVector state = simulate(build_vanilla_circuit(inst, pv));
    if (exact) {
      double acc = 0;
      for (uint64_t x = 0; x < state.amps.size(); ++x)
        acc += std::norm(state.amps[x]) * table[x];
      return acc;
    }
    double best = 0;
    for (int c = 0; c < copies; ++c) {
      const auto shots = sample(state, cfg.shots, derive_seed(sample_base, eval_counter++));
      double acc = 0;
      for (const auto& s : shots) acc += table[s.to_index()];
      acc /= double(shots.size());
      if (c == 0 || acc < best) best = acc;
    }
    return best;
  };

  const MetropolisResult mr = metropolis_optimize(objective, 2 * p, cfg);
  QaoaResult out;
  out.best_params = vanilla_params(mr.best_params, p);
  out.best_objective = mr.best_value;
  out.ratio = approximation_ratio(ex, mr.best_value);
  out.measured = cnot_metrics(shape);
  out.restart_best = mr.restart_best;
  out.copies_used = copies;
  out.exact_mode = exact;
  return out;
}

namespace {

// Precomputed p=1 objective: per basis, the physical Z-string support of
// every decoded edge correlator. Decoded z_i z_j is the parity of the member
// bits selected by the XOR of the two logical masks; the completion flip
// cancels in products.
struct P1Objective {
  const ParityMapping* m;
  std::vector<int> fields;
  std::vector<int64_t> weights;
  std::vector<std::vector<std::vector<int>>> supports;  // [basis][edge]
  bool cut;
  int64_t weight_sum;

  P1Objective(const Instance& inst, const ParityMapping& mapping,
              const std::vector<ReadoutBasis>& bases)
      : m(&mapping), cut(inst.convention == EnergyConvention::Cut),
        weight_sum(inst.weight_sum()) {
    require(inst.pairwise(), ErrorCode::InvalidArgument,
            "closed-form path requires a pairwise instance");
    fields = physical_fields(inst, mapping, /*allow_missing=*/true);
    for (const auto& e : inst.edges) weights.push_back(e.weight);
    for (const auto& basis : bases) {
      const LinearDecoder dec(mapping, basis);
      std::vector<std::vector<int>> per_edge;
      for (const auto& e : inst.edges) {
        const uint64_t mask = dec.pair_mask(e.vertices[0], e.vertices[1]);
        std::vector<int> support;
        for (size_t pos = 0; pos < dec.members().size(); ++pos)
          if (mask >> pos & 1) support.push_back(dec.members()[pos]);
        per_edge.push_back(std::move(support));
      }
      supports.push_back(std::move(per_edge));
    }
  }

  std::vector<double> energies(double gamma, double omega, double beta) const {
    std::vector<double> out;
    for (const auto& per_edge : supports) {
      double spin = 0;
      for (size_t e = 0; e < per_edge.size(); ++e)
        spin += double(weights[e]) *
                p1_zstring_expectation(*m, fields, gamma, omega, beta, per_edge[e]);
      out.push_back(cut ? (spin - double(weight_sum)) / 2.0 : spin);
    }
    return out;
  }
};

}  // namespace

std::vector<double> p1_basis_energies(const Instance& inst, const ParityMapping& m,
                                      const std::vector<ReadoutBasis>& bases, double gamma,
                                      double omega, double beta) {
  return P1Objective(inst, m, bases).energies(gamma, omega, beta);
}

QaoaResult run_parity_qaoa(const Instance& inst, const ParityMapping& m,
                           const std::vector<ReadoutBasis>& bases, int p, ObjectiveKind kind,
                           const OptimizerConfig& cfg) {
  cfg.check();
  require(p >= 1, ErrorCode::InvalidArgument, "QAOA needs p >= 1");
  require(!bases.empty(), ErrorCode::InvalidArgument, "need at least one readout basis");
  const Extrema ex = brute_force_extrema(inst);
  const auto fields = physical_fields(inst, m, /*allow_missing=*/true);
  const int K = m.num_qubits();
  const bool exact = cfg.shots == 0;
  const bool dense_path = K <= kExactObjectiveWidthGuard;
  if (!dense_path) {
    require(exact && p == 1, ErrorCode::Guard,
            "mappings beyond the dense guard support only exact p=1 evaluation");
    require(kind != ObjectiveKind::BestPerShot, ErrorCode::Guard,
            "best-per-shot needs the dense outcome distribution");
  }

  std::optional<DecodeTables> tables;
  std::optional<P1Objective> p1;
  if (dense_path)
    tables.emplace(inst, m, bases);
  else
    p1.emplace(inst, m, bases);

  uint64_t eval_counter = 0;
  const uint64_t sample_base = derive_seed(cfg.seed, stream::kSampling);
  auto objective = [&](const std::vector<double>& v) {
    const ParamVector pv = parity_params(v, p);
    if (!dense_path) {
      const auto energies = p1->energies(pv.gammas[0], pv.omegas[0], pv.betas[0]);
      if (kind == ObjectiveKind::Mean) {
        double s = 0;
        for (double e : energies) s += e;
        return s / double(energies.size());
      }
      return *std::min_element(energies.begin(), energies.end());
    }
    const StateVector state = simulate(build_parity_circuit(m, fields, pv));
    if (exact) return objective_from_tables(*tables, state, kind);
    const auto shots = sample(state, cfg.shots, derive_seed(sample_base, eval_counter++));
    return objective_from_tables(*tables, shots, kind);
  };

  const MetropolisResult mr = metropolis_optimize(objective, 3 * p, cfg);
  QaoaResult out;
  out.best_params = parity_params(mr.best_params, p);
  out.best_objective = mr.best_value;
  out.ratio = approximation_ratio(ex, mr.best_value);
  ParamVector zero;
  zero.gammas.assign(p, 0.0);
  zero.omegas.assign(p, 0.0);
  zero.betas.assign(p, 0.0);
  out.measured = cnot_metrics(build_parity_circuit(m, fields, zero));
  out.restart_best = mr.restart_best;
  out.copies_used = 1;
  out.exact_mode = exact;
  return out;
}

}  // namespace pq
