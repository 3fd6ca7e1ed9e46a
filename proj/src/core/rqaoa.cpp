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

#include "rqaoa.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "rng.hpp"

namespace pq {

std::vector<std::vector<double>> correlation_matrix_vanilla(const Instance& inst,
                                                            const ParamVector& params) {
  require(inst.pairwise(), ErrorCode::InvalidArgument, "correlations defined on pairwise edges");
  const Circuit c = build_vanilla_circuit(inst, params);
  const StateVector state = simulate(c);
  std::vector<std::vector<double>> w(inst.n, std::vector<double>(inst.n, 0.0));
  for (const auto& e : inst.edges) {
    const int i = e.vertices[0], j = e.vertices[1];
    const double v = expectation_zstring(
        state, {c.final_permutation[i], c.final_permutation[j]});
    w[i][j] = w[j][i] = v;
  }
  return w;
}

std::vector<std::vector<double>> correlation_matrix_parity(const Instance& inst,
                                                           const ParityMapping& m,
                                                           const std::vector<ReadoutBasis>& bases,
                                                           const ParamVector& params) {
  require(inst.pairwise(), ErrorCode::InvalidArgument, "correlations defined on pairwise edges");
  require(!bases.empty(), ErrorCode::InvalidArgument, "need at least one readout basis");
  const auto fields = physical_fields(inst, m, /*allow_missing=*/true);
  const bool dense_path = m.num_qubits() <= kDenseWidthGuard && params.layers() > 1;
  if (params.layers() > 1)
    require(m.num_qubits() <= kDenseWidthGuard, ErrorCode::Guard,
            "p > 1 correlations need the dense state");

  std::optional<StateVector> state;
  if (dense_path) state = simulate(build_parity_circuit(m, fields, params));

  std::vector<std::vector<double>> w(inst.n, std::vector<double>(inst.n, 0.0));
  for (const auto& basis : bases) {
    const LinearDecoder dec(m, basis);
    for (const auto& e : inst.edges) {
      const int i = e.vertices[0], j = e.vertices[1];
      const uint64_t mask = dec.pair_mask(i, j);
      std::vector<int> support;
      for (size_t pos = 0; pos < dec.members().size(); ++pos)
        if (mask >> pos & 1) support.push_back(dec.members()[pos]);
      const double v =
          dense_path ? expectation_zstring(*state, support)
                     : p1_zstring_expectation(m, fields, params.gammas[0], params.omegas[0],
                                              params.betas[0], support);
      w[i][j] += v;
      w[j][i] += v;
    }
  }
  const double scale = 1.0 / double(bases.size());
  for (auto& row : w)
    for (auto& v : row) v *= scale;
  return w;
}

Elimination eliminate(const Instance& inst, const std::vector<std::vector<double>>& w) {
  require(inst.pairwise(), ErrorCode::InvalidArgument, "elimination needs a pairwise instance");
  require(!inst.edges.empty(), ErrorCode::InvalidArgument, "no edges to eliminate");
  require(int(w.size()) == inst.n, ErrorCode::InvalidArgument, "correlation matrix size mismatch");

  // argmax |W| over edges, lexicographic tie-break.
  const Edge* chosen = nullptr;
  double best = -1.0;
  for (const auto& e : inst.edges) {
    const double v = std::abs(w[e.vertices[0]][e.vertices[1]]);
    require(std::isfinite(v), ErrorCode::InvalidArgument, "correlation is not finite");
    if (v > best) {
      best = v;
      chosen = &e;
    }
  }
  const int anchor = chosen->vertices[0], eliminated = chosen->vertices[1];
  const double wval = w[anchor][eliminated];
  const int sign = wval < 0.0 ? -1 : 1;

  Elimination out;
  out.rule = {eliminated, anchor, sign, std::abs(wval), wval == 0.0};

  std::map<std::vector<int>, int64_t> merged;
  for (const auto& e : inst.edges) {
    const int a = e.vertices[0], b = e.vertices[1];
    if (a == anchor && b == eliminated) {
      out.spin_offset += int64_t(sign) * e.weight;  // z_b = sign * z_a
      continue;
    }
    int u = a, v = b;
    int wgt = e.weight;
    if (u == eliminated) u = anchor, wgt *= sign;
    if (v == eliminated) v = anchor, wgt *= sign;
    std::vector<int> key = {std::min(u, v), std::max(u, v)};
    merged[key] += wgt;
  }

  out.index_map.reserve(inst.n - 1);
  std::vector<int> new_id(inst.n, -1);
  for (int v = 0; v < inst.n; ++v) {
    if (v == eliminated) continue;
    new_id[v] = int(out.index_map.size());
    out.index_map.push_back(v);
  }

  out.reduced.n = inst.n - 1;
  out.reduced.convention = EnergyConvention::Spin;
  out.reduced.label = inst.label + "/r" + std::to_string(eliminated);
  for (const auto& [key, wgt] : merged) {
    if (wgt == 0) continue;
    out.reduced.edges.push_back({{new_id[key[0]], new_id[key[1]]}, int(wgt)});
  }
  std::sort(out.reduced.edges.begin(), out.reduced.edges.end(),
            [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
  validate_instance(out.reduced);
  return out;
}

RqaoaVariant rqaoa_variant_from_string(const std::string& s) {
  if (s == "vanilla") return RqaoaVariant::Vanilla;
  if (s == "parity") return RqaoaVariant::Parity;
  fail(ErrorCode::InvalidArgument, "unknown RQAOA variant: " + s);
}

RqaoaResult run_rqaoa(const Instance& inst, RqaoaVariant variant, int p, int stop_size,
                      ObjectiveKind parity_kind, const OptimizerConfig& cfg) {
  cfg.check();
  require(stop_size >= 2, ErrorCode::InvalidArgument, "stop size must be >= 2");
  require(inst.pairwise(), ErrorCode::InvalidArgument, "RQAOA needs a pairwise instance");

  RqaoaResult out;
  // First-step circuit metrics on the full-size problem.
  {
    ParamVector zero;
    zero.gammas.assign(p, 0.0);
    zero.betas.assign(p, 0.0);
    if (variant == RqaoaVariant::Vanilla) {
      out.first_step_measured = cnot_metrics(build_vanilla_circuit(inst, zero));
    } else {
      zero.omegas.assign(p, 0.0);
      const ParityMapping m = encode_complete(inst.n);
      out.first_step_measured =
          cnot_metrics(build_parity_circuit(m, physical_fields(inst, m, true), zero));
    }
  }

  Instance cur = inst;
  std::vector<int> cur_to_orig(inst.n);
  std::iota(cur_to_orig.begin(), cur_to_orig.end(), 0);
  const uint64_t step_base = derive_seed(cfg.seed, stream::kRqaoaStep);

  int step = 0;
  while (cur.n > stop_size) {
    require(!cur.edges.empty(), ErrorCode::Runtime, "reduced instance lost all edges");
    OptimizerConfig step_cfg = cfg;
    step_cfg.seed = derive_seed(step_base, uint64_t(step));

    std::vector<std::vector<double>> w;
    if (variant == RqaoaVariant::Vanilla) {
      const QaoaResult q = run_vanilla_qaoa(cur, p, step_cfg);
      w = correlation_matrix_vanilla(cur, q.best_params);
    } else {
      const ParityMapping m = encode_complete(cur.n);
      const auto bases = logical_lines(m);
      const QaoaResult q = run_parity_qaoa(cur, m, bases, p, parity_kind, step_cfg);
      w = correlation_matrix_parity(cur, m, bases, q.best_params);
    }
    Elimination el = eliminate(cur, w);
    FixingRule rule = el.rule;
    rule.eliminated = cur_to_orig[rule.eliminated];
    rule.anchor = cur_to_orig[rule.anchor];
    out.trace.rules.push_back(rule);
    out.trace.spin_offsets.push_back(el.spin_offset);

    std::vector<int> next(el.index_map.size());
    for (size_t v = 0; v < el.index_map.size(); ++v) next[v] = cur_to_orig[el.index_map[v]];
    cur_to_orig = std::move(next);
    cur = std::move(el.reduced);
    ++step;
  }

  const Extrema res_ex = brute_force_extrema(cur);
  out.trace.residual = cur;
  out.trace.residual_solution = res_ex.ground_states.front();

  BitString full(inst.n);
  for (int v = 0; v < cur.n; ++v) full.set(cur_to_orig[v], out.trace.residual_solution.get(v));
  for (auto it = out.trace.rules.rbegin(); it != out.trace.rules.rend(); ++it)
    full.set(it->eliminated, full.get(it->anchor) ^ (it->sign < 0));

  out.assignment = full;
  out.energy = objective_value(inst, full);
  out.ratio = approximation_ratio(brute_force_extrema(inst), double(out.energy));
  return out;
}

std::string trace_to_json(const RqaoaTrace& trace) {
  nlohmann::json j;
  j["rules"] = nlohmann::json::array();
  for (const auto& r : trace.rules)
    j["rules"].push_back({{"eliminated", r.eliminated},
                          {"anchor", r.anchor},
                          {"sign", r.sign},
                          {"abs_correlation", r.abs_correlation},
                          {"zero_correlation", r.zero_correlation}});
  j["spin_offsets"] = trace.spin_offsets;
  j["residual_solution"] = trace.residual_solution.to_string();
  j["residual"] = nlohmann::json::parse(instance_to_json(trace.residual));
  return j.dump(2) + "\n";
}

}  // namespace pq
