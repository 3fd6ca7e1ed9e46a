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

#include <doctest.h>

#include "core/rqaoa.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"

using namespace pq;

namespace {

ParamVector vanilla_pv(double g, double b) {
  ParamVector pv;
  pv.gammas = {g};
  pv.betas = {b};
  return pv;
}

ParamVector parity_pv(double g, double o, double b) {
  ParamVector pv;
  pv.gammas = {g};
  pv.omegas = {o};
  pv.betas = {b};
  return pv;
}

Instance random_spin_instance(int n, uint64_t seed) {
  Instance inst = random_instance(Topology::Complete, n, seed);
  inst.convention = EnergyConvention::Spin;
  return inst;
}

// Synthetic correlation matrix singling out one edge.
std::vector<std::vector<double>> pick_edge(int n, int i, int j, double value) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  w[i][j] = w[j][i] = value;
  return w;
}

}  // namespace

TEST_CASE("vanilla correlations vanish at gamma = 0 and stay within [-1, 1]") {
  const Instance inst = random_instance(Topology::Complete, 4, 6);
  const auto w0 = correlation_matrix_vanilla(inst, vanilla_pv(0.0, 0.7));
  for (const auto& e : inst.edges)
    CHECK(w0[e.vertices[0]][e.vertices[1]] == doctest::Approx(0.0).epsilon(1e-12));

  const auto w = correlation_matrix_vanilla(inst, vanilla_pv(0.8, 0.3));
  for (const auto& e : inst.edges) {
    const double v = w[e.vertices[0]][e.vertices[1]];
    CHECK(std::abs(v) <= 1.0 + 1e-12);
    CHECK(v == w[e.vertices[1]][e.vertices[0]]);
  }
}

TEST_CASE("vanilla correlations match the kron-matrix oracle on three qubits") {
  const Instance inst = random_instance(Topology::Complete, 3, 13);
  const double g = 0.62, b = -0.41;
  const auto w = correlation_matrix_vanilla(inst, vanilla_pv(g, b));
  const oracle::Vec ideal = oracle::vanilla_ideal_state(inst, {g}, {b});
  for (const auto& e : inst.edges) {
    const int i = e.vertices[0], j = e.vertices[1];
    double direct = 0;
    for (uint64_t x = 0; x < ideal.size(); ++x) {
      const int par = int(x >> i & 1) ^ int(x >> j & 1);
      direct += std::norm(ideal[x]) * (par ? -1 : 1);
    }
    CHECK(w[i][j] == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("parity correlations equal the dense decoded definition") {
  const Instance inst = random_instance(Topology::Complete, 5, 29);
  const ParityMapping m = encode_complete(5);
  const auto bases = logical_lines(m);
  const auto fields = physical_fields(inst, m);
  const ParamVector pv = parity_pv(0.52, -0.33, 0.74);
  const auto w = correlation_matrix_parity(inst, m, bases, pv);

  const StateVector state = simulate(build_parity_circuit(m, fields, pv));
  for (const auto& e : inst.edges) {
    const int i = e.vertices[0], j = e.vertices[1];
    double direct = 0;
    for (const auto& basis : bases) {
      const LinearDecoder dec(m, basis);
      for (uint64_t q = 0; q < state.amps.size(); ++q) {
        const double prob = std::norm(state.amps[q]);
        if (prob == 0) continue;
        const BitString s = dec.decode(dec.extract(q));
        const int par = int(s.get(i)) ^ int(s.get(j));
        direct += prob * (par ? -1.0 : 1.0);
      }
    }
    direct /= double(bases.size());
    CHECK(w[i][j] == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("per-basis correlations are +-1 on a classical state") {
  const Instance inst = random_instance(Topology::Complete, 5, 17);
  const ParityMapping m = encode_complete(5);
  const auto bases = logical_lines(m);
  const auto fields = physical_fields(inst, m);
  // theta_3 with Omega = 0 prepares the deterministic state q~3.
  const double g = -M_PI / 4, b = M_PI / 4;
  for (const auto& basis : bases) {
    const LinearDecoder dec(m, basis);
    for (const auto& e : inst.edges) {
      const uint64_t mask = dec.pair_mask(e.vertices[0], e.vertices[1]);
      std::vector<int> support;
      for (size_t pos = 0; pos < dec.members().size(); ++pos)
        if (mask >> pos & 1) support.push_back(dec.members()[pos]);
      const double v = p1_zstring_expectation(m, fields, g, 0.0, b, support);
      CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("elimination merges the triangle as expected") {
  Instance tri;
  tri.n = 3;
  tri.edges = {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}};
  tri.label = "tri";
  tri.convention = EnergyConvention::Spin;
  const Elimination el = eliminate(tri, pick_edge(3, 0, 1, 0.9));
  CHECK(el.rule.anchor == 0);
  CHECK(el.rule.eliminated == 1);
  CHECK(el.rule.sign == 1);
  CHECK(el.spin_offset == 1);  // the (0,1) edge collapses to a constant
  REQUIRE(el.reduced.edges.size() == 1);
  CHECK(el.reduced.n == 2);
  CHECK(el.reduced.edges[0].vertices == std::vector<int>{0, 1});
  CHECK(el.reduced.edges[0].weight == 2);  // J02 + J12
  CHECK(el.index_map == std::vector<int>{0, 2});
}

TEST_CASE("substitution preserves spin energies of lifted assignments") {
  Rng rng(23);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const Instance inst = random_spin_instance(n, rng.next_u64());
      for (const auto& edge : inst.edges) {
        for (double corr : {0.8, -0.8}) {
          const Elimination el =
              eliminate(inst, pick_edge(n, edge.vertices[0], edge.vertices[1], corr));
          for (uint64_t x = 0; x < (uint64_t{1} << el.reduced.n); ++x) {
            const BitString reduced = BitString::from_index(el.reduced.n, x);
            BitString lifted(n);
            for (int v = 0; v < el.reduced.n; ++v)
              lifted.set(el.index_map[v], reduced.get(v));
            lifted.set(el.rule.eliminated,
                       lifted.get(el.rule.anchor) ^ (el.rule.sign < 0));
            CHECK(objective_value(el.reduced, reduced) + el.spin_offset ==
                  objective_value(inst, lifted));
          }
        }
      }
    }
  }
}

TEST_CASE("argmax obeys the lexicographic tie-break and scale invariance") {
  Instance inst = random_spin_instance(4, 3);
  std::vector<std::vector<double>> w(4, std::vector<double>(4, 0.5));
  const Elimination el = eliminate(inst, w);
  CHECK(el.rule.anchor == 0);
  CHECK(el.rule.eliminated == 1);  // lexicographically smallest edge

  std::vector<std::vector<double>> w2 = w;
  for (auto& row : w2)
    for (auto& v : row) v *= 3.0;
  const Elimination el2 = eliminate(inst, w2);
  CHECK(el2.rule.anchor == el.rule.anchor);
  CHECK(el2.rule.eliminated == el.rule.eliminated);

  // sign(0) resolves to +1 and is flagged.
  std::vector<std::vector<double>> wz(4, std::vector<double>(4, 0.0));
  const Elimination elz = eliminate(inst, wz);
  CHECK(elz.rule.sign == 1);
  CHECK(elz.rule.zero_correlation);
}

TEST_CASE("stop size equal to n reduces to brute force with ratio one") {
  const Instance inst = random_instance(Topology::Complete, 6, 31);
  OptimizerConfig cfg;
  cfg.n_init = 2;
  cfg.n_mc = 20;
  cfg.seed = 5;
  const RqaoaResult res =
      run_rqaoa(inst, RqaoaVariant::Vanilla, 1, inst.n, ObjectiveKind::Mean, cfg);
  CHECK(res.ratio == doctest::Approx(1.0));
  CHECK(res.trace.rules.empty());
  CHECK(res.assignment.size() == 6);
}

TEST_CASE("full recursion reconstructs a complete assignment deterministically") {
  const Instance inst = random_instance(Topology::Complete, 7, 47);
  OptimizerConfig cfg;
  cfg.n_init = 3;
  cfg.n_mc = 60;
  cfg.seed = 11;
  for (RqaoaVariant variant : {RqaoaVariant::Vanilla, RqaoaVariant::Parity}) {
    const RqaoaResult res = run_rqaoa(inst, variant, 1, 2, ObjectiveKind::Mean, cfg);
    CHECK(res.trace.rules.size() == 5);  // 7 -> 2
    CHECK(res.assignment.size() == 7);
    CHECK(res.ratio >= 0.0);
    CHECK(res.ratio <= 1.0 + 1e-12);
    CHECK(res.energy == objective_value(inst, res.assignment));
    // Every vertex is fixed exactly once.
    std::set<int> fixed;
    for (const auto& r : res.trace.rules) CHECK(fixed.insert(r.eliminated).second);
    const RqaoaResult again = run_rqaoa(inst, variant, 1, 2, ObjectiveKind::Mean, cfg);
    CHECK(again.energy == res.energy);
    CHECK(again.assignment == res.assignment);
    CHECK(!trace_to_json(res.trace).empty());
  }
}

TEST_CASE("parity RQAOA accepts reduced instances with merged weights") {
  // Force several eliminations so +-2 weights and dropped edges appear.
  const Instance inst = random_instance(Topology::Complete, 8, 101);
  OptimizerConfig cfg;
  cfg.n_init = 2;
  cfg.n_mc = 40;
  cfg.seed = 21;
  const RqaoaResult res = run_rqaoa(inst, RqaoaVariant::Parity, 1, 4, ObjectiveKind::Mean, cfg);
  CHECK(res.trace.rules.size() == 4);
  CHECK(res.assignment.size() == 8);
}

TEST_CASE("guards") {
  const Instance inst = random_instance(Topology::Complete, 5, 1);
  OptimizerConfig cfg;
  CHECK_THROWS_AS(run_rqaoa(inst, RqaoaVariant::Vanilla, 1, 1, ObjectiveKind::Mean, cfg),
                  Error);
  const Instance hyper = random_instance(Topology::HypergraphFig9, 8, 1);
  CHECK_THROWS_AS(run_rqaoa(hyper, RqaoaVariant::Parity, 1, 4, ObjectiveKind::Mean, cfg),
                  Error);
  CHECK_THROWS_AS(eliminate(Instance{2, {}, "empty", {}, EnergyConvention::Spin},
                            pick_edge(2, 0, 1, 1.0)),
                  Error);
}
