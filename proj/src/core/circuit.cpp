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

#include "circuit.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace pq {

Gate Gate::pauli(char axis, int q) {
  switch (axis) {
    case 'x': return {GateKind::PauliX, q, -1, 0.0};
    case 'y': return {GateKind::PauliY, q, -1, 0.0};
    case 'z': return {GateKind::PauliZ, q, -1, 0.0};
  }
  fail(ErrorCode::InvalidArgument, "pauli axis must be x, y or z");
}

Circuit build_vanilla_circuit(const Instance& inst, const ParamVector& params) {
  params.check(/*parity=*/false);
  require(inst.pairwise(), ErrorCode::InvalidArgument,
          "vanilla circuits require a pairwise instance");
  const int n = inst.n;
  require(n >= 2, ErrorCode::InvalidArgument, "need at least two qubits");

  std::vector<std::vector<int>> weight(n, std::vector<int>(n, 0));
  for (const auto& e : inst.edges)
    weight[e.vertices[0]][e.vertices[1]] = weight[e.vertices[1]][e.vertices[0]] = e.weight;

  Circuit c;
  c.width = n;
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::h(q));

  // logical_at[pos] = logical qubit currently on that wire.
  std::vector<int> logical_at(n);
  std::iota(logical_at.begin(), logical_at.end(), 0);

  for (int layer = 0; layer < params.layers(); ++layer) {
    const double gamma = params.gammas[layer];
    for (int round = 0; round < n; ++round) {
      for (int a = round % 2; a + 1 < n; a += 2) {
        const int u = logical_at[a], v = logical_at[a + 1];
        const double angle = 2.0 * gamma * weight[u][v];
        // Fused ZZ+SWAP block: CNOT(a,b), rz(b), CNOT(b,a), CNOT(a,b).
        c.gates.push_back(Gate::cnot(a, a + 1));
        if (angle != 0.0) c.gates.push_back(Gate::rz(a + 1, angle));
        c.gates.push_back(Gate::cnot(a + 1, a));
        c.gates.push_back(Gate::cnot(a, a + 1));
        std::swap(logical_at[a], logical_at[a + 1]);
      }
    }
    const double beta = params.betas[layer];
    for (int q = 0; q < n; ++q) c.gates.push_back(Gate::rx(q, 2.0 * beta));
  }

  c.final_permutation.resize(n);
  for (int pos = 0; pos < n; ++pos) c.final_permutation[logical_at[pos]] = pos;
  return c;
}

// Greedy first-fit batching of constraints into groups of disjoint support;
// the group-major emission order lets disjoint chains run in parallel under
// the ASAP layering.
static std::vector<std::vector<int>> schedule_constraints(const ParityMapping& m) {
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<bool>> used;  // per group, per qubit
  for (int l = 0; l < m.num_constraints(); ++l) {
    const auto& mem = m.constraints[l].members;
    size_t g = 0;
    for (; g < groups.size(); ++g) {
      bool clash = false;
      for (int q : mem)
        if (used[g][q]) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (g == groups.size()) {
      groups.emplace_back();
      used.emplace_back(m.num_qubits(), false);
    }
    groups[g].push_back(l);
    for (int q : mem) used[g][q] = true;
  }
  return groups;
}

Circuit build_parity_circuit(const ParityMapping& m, const std::vector<int>& fields,
                             const ParamVector& params) {
  params.check(/*parity=*/true);
  require(int(fields.size()) == m.num_qubits(), ErrorCode::InvalidArgument,
          "field vector length must equal qubit count");

  Circuit c;
  c.width = m.num_qubits();
  for (int q = 0; q < c.width; ++q) c.gates.push_back(Gate::h(q));

  const auto groups = schedule_constraints(m);
  for (int layer = 0; layer < params.layers(); ++layer) {
    const double gamma = params.gammas[layer];
    const double omega = params.omegas[layer];
    for (int q = 0; q < c.width; ++q) {
      const double angle = 2.0 * gamma * fields[q];
      if (angle != 0.0) c.gates.push_back(Gate::rz(q, angle));
    }
    for (const auto& group : groups) {
      for (int l : group) {
        const auto& ct = m.constraints[l];
        const auto& mem = ct.members;
        const int last = int(mem.size()) - 1;
        for (int i = 0; i < last; ++i) c.gates.push_back(Gate::cnot(mem[i], mem[i + 1]));
        c.gates.push_back(Gate::plaquette_rz(mem[last], 2.0 * omega * ct.sign));
        for (int i = last - 1; i >= 0; --i) c.gates.push_back(Gate::cnot(mem[i], mem[i + 1]));
      }
    }
    const double beta = params.betas[layer];
    for (int q = 0; q < c.width; ++q) c.gates.push_back(Gate::rx(q, 2.0 * beta));
  }

  c.final_permutation.resize(c.width);
  std::iota(c.final_permutation.begin(), c.final_permutation.end(), 0);
  return c;
}

ResourceReport cnot_metrics(const Circuit& c) {
  std::vector<int64_t> avail(c.width, 0);
  std::vector<char> layer_has_cnot;
  int64_t count = 0;
  for (const auto& g : c.gates) {
    int64_t layer = avail[g.q0] + 1;
    if (g.q1 >= 0) layer = std::max(layer, avail[g.q1] + 1);
    avail[g.q0] = layer;
    if (g.q1 >= 0) avail[g.q1] = layer;
    if (size_t(layer) > layer_has_cnot.size()) layer_has_cnot.resize(layer, 0);
    if (g.kind == GateKind::CNOT) {
      layer_has_cnot[layer - 1] = 1;
      ++count;
    }
  }
  ResourceReport r;
  r.cnot_count = count;
  r.cnot_depth = std::count(layer_has_cnot.begin(), layer_has_cnot.end(), 1);
  r.source = ResourceReport::Source::Measured;
  return r;
}

ResourceKind resource_kind_from_string(const std::string& s) {
  if (s == "vanilla_complete") return ResourceKind::VanillaComplete;
  if (s == "parity_complete") return ResourceKind::ParityComplete;
  if (s == "vanilla_fig3") return ResourceKind::VanillaFig3;
  if (s == "parity_fig3") return ResourceKind::ParityFig3;
  if (s == "vanilla_fig9") return ResourceKind::VanillaFig9;
  if (s == "parity_fig9") return ResourceKind::ParityFig9;
  fail(ErrorCode::InvalidArgument, "unknown resource kind: " + s);
}

ResourceReport analytic_resources(ResourceKind kind, int n, int p) {
  require(p >= 1, ErrorCode::InvalidArgument, "layer count must be >= 1");
  int64_t depth = 0, count = 0;
  switch (kind) {
    case ResourceKind::VanillaComplete:
      require(n >= 3, ErrorCode::InvalidArgument, "need n >= 3");
      depth = 3 * int64_t(n) + 4;
      count = 3 * int64_t(n) * (n - 1) / 2;
      break;
    case ResourceKind::ParityComplete:
      require(n >= 3, ErrorCode::InvalidArgument, "need n >= 3");
      depth = 10;
      count = 2 * int64_t(n - 2) * (n - 3);
      break;
    case ResourceKind::VanillaFig3: depth = 20; count = 38; break;
    case ResourceKind::ParityFig3: depth = 12; count = 44; break;
    case ResourceKind::VanillaFig9: depth = 32; count = 61; break;
    case ResourceKind::ParityFig9: depth = 13; count = 46; break;
  }
  return {depth * p, count * p, ResourceReport::Source::Analytic};
}

std::string circuit_to_json(const Circuit& c) {
  static const char* names[] = {"h", "rx", "rz", "plaquette_rz", "x", "y", "z", "cnot", "zz"};
  nlohmann::json j;
  j["width"] = c.width;
  j["final_permutation"] = c.final_permutation;
  j["gates"] = nlohmann::json::array();
  for (const auto& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = names[int(g.kind)];
    jg["qubits"] = g.q1 >= 0 ? std::vector<int>{g.q0, g.q1} : std::vector<int>{g.q0};
    if (g.kind == GateKind::RX || g.kind == GateKind::RZ || g.kind == GateKind::PlaquetteRZ ||
        g.kind == GateKind::ZZ)
      jg["angle"] = g.angle;
    j["gates"].push_back(jg);
  }
  return j.dump() + "\n";
}

}  // namespace pq
