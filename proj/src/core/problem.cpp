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

#include "problem.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "rng.hpp"

namespace pq {

bool Instance::pairwise() const {
  for (const auto& e : edges)
    if (e.vertices.size() != 2) return false;
  return true;
}

int64_t Instance::weight_sum() const {
  int64_t s = 0;
  for (const auto& e : edges) s += e.weight;
  return s;
}

Topology topology_from_string(const std::string& s) {
  if (s == "complete") return Topology::Complete;
  if (s == "regular4_fig3") return Topology::Regular4Fig3;
  if (s == "hypergraph_fig9") return Topology::HypergraphFig9;
  fail(ErrorCode::InvalidArgument, "unknown topology: " + s);
}

std::string topology_to_string(Topology t) {
  switch (t) {
    case Topology::Complete: return "complete";
    case Topology::Regular4Fig3: return "regular4_fig3";
    case Topology::HypergraphFig9: return "hypergraph_fig9";
  }
  return "?";
}

const std::vector<std::vector<int>>& fig3_edge_sets() {
  // 4-regular graph on 8 vertices; the union of its eight bundled spanning
  // trees (see parity_map.cpp).
  static const std::vector<std::vector<int>> e = {
      {0, 1}, {0, 2}, {0, 6}, {0, 7}, {1, 2}, {1, 4}, {1, 5}, {2, 6},
      {2, 7}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}};
  return e;
}

const std::vector<std::vector<int>>& fig9_edge_sets() {
  // Reconstructed hypergraph on 8 vertices: 10 two-vertex and 7 three-vertex
  // hyperedges, chosen so the parity-set span has rank 7 (the flip symmetry
  // {4,5,6,7} survives) and a short plaquette basis exists after adding two
  // ancillas.
  static const std::vector<std::vector<int>> e = {
      {0, 1}, {0, 1, 2}, {0, 2}, {0, 3}, {0, 4, 5}, {0, 6, 7},
      {1, 2}, {1, 2, 3}, {1, 3}, {1, 4, 5}, {2, 3}, {2, 6, 7},
      {3, 6, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  return e;
}

void validate_instance(const Instance& inst) {
  require(inst.n >= 1, ErrorCode::InvalidArgument, "instance needs n >= 1");
  std::set<std::vector<int>> seen;
  bool has_triple = false;
  for (const auto& e : inst.edges) {
    require(e.vertices.size() == 2 || e.vertices.size() == 3, ErrorCode::InvalidArgument,
            "edge size must be 2 or 3");
    require(std::is_sorted(e.vertices.begin(), e.vertices.end()), ErrorCode::InvalidArgument,
            "edge vertices must be sorted");
    for (size_t i = 0; i + 1 < e.vertices.size(); ++i)
      require(e.vertices[i] != e.vertices[i + 1], ErrorCode::InvalidArgument,
              "edge vertices must be distinct");
    require(e.vertices.front() >= 0 && e.vertices.back() < inst.n, ErrorCode::InvalidArgument,
            "edge vertex out of range");
    require(e.weight != 0, ErrorCode::InvalidArgument, "edge weight must be nonzero");
    require(seen.insert(e.vertices).second, ErrorCode::InvalidArgument,
            "duplicate vertex set among edges");
    if (e.vertices.size() == 3) has_triple = true;
  }
  if (has_triple)
    require(inst.convention == EnergyConvention::Spin, ErrorCode::InvalidArgument,
            "hypergraph instances must use the spin convention");
}

static void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
}

Instance random_instance(Topology topology, int n, uint64_t seed) {
  Instance inst;
  inst.seed = seed;
  Rng rng(derive_seed(seed, stream::kInstanceWeights));
  switch (topology) {
    case Topology::Complete: {
      require(n >= 3, ErrorCode::InvalidArgument, "complete topology needs n >= 3");
      inst.n = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inst.edges.push_back({{i, j}, 0});
      inst.label = "complete_n" + std::to_string(n) + "_s" + std::to_string(seed);
      inst.convention = EnergyConvention::Cut;
      break;
    }
    case Topology::Regular4Fig3: {
      inst.n = 8;
      for (const auto& v : fig3_edge_sets()) inst.edges.push_back({v, 0});
      inst.label = "regular4_fig3_s" + std::to_string(seed);
      inst.convention = EnergyConvention::Cut;
      break;
    }
    case Topology::HypergraphFig9: {
      inst.n = 8;
      for (const auto& v : fig9_edge_sets()) inst.edges.push_back({v, 0});
      inst.label = "hypergraph_fig9_s" + std::to_string(seed);
      inst.convention = EnergyConvention::Spin;
      break;
    }
  }
  sort_edges(inst.edges);
  for (auto& e : inst.edges) e.weight = rng.next_sign();
  validate_instance(inst);
  return inst;
}

int64_t objective_value(const Instance& inst, const BitString& assignment) {
  require(assignment.size() == inst.n, ErrorCode::InvalidArgument,
          "assignment length does not match instance size");
  int64_t acc = 0;
  if (inst.convention == EnergyConvention::Cut) {
    for (const auto& e : inst.edges) {
      int x = assignment.get(e.vertices[0]) ^ assignment.get(e.vertices[1]);
      acc -= int64_t(e.weight) * x;
    }
  } else {
    for (const auto& e : inst.edges) {
      int par = 0;
      for (int v : e.vertices) par ^= assignment.get(v);
      acc += par ? -int64_t(e.weight) : int64_t(e.weight);
    }
  }
  return acc;
}

Extrema brute_force_extrema(const Instance& inst) {
  require(inst.n <= 30, ErrorCode::Guard, "brute force guarded at n <= 30");
  const bool half = inst.pairwise();  // global-flip symmetry
  const int n = inst.n;
  const uint64_t count = uint64_t{1} << (half ? n - 1 : n);

  // Pack edges as index masks for the scan.
  struct Packed {
    uint32_t mask;
    int w;
  };
  std::vector<Packed> packed;
  packed.reserve(inst.edges.size());
  for (const auto& e : inst.edges) {
    uint32_t m = 0;
    for (int v : e.vertices) m |= uint32_t{1} << v;
    packed.push_back({m, e.weight});
  }
  const bool cut = inst.convention == EnergyConvention::Cut;

  Extrema ex;
  bool first = true;
  std::vector<uint64_t> minimizers;
  for (uint64_t s = 0; s < count; ++s) {
    int64_t v = 0;
    if (cut) {
      for (const auto& p : packed)
        v -= int64_t(p.w) * (std::popcount(uint32_t(s) & p.mask) & 1);
    } else {
      for (const auto& p : packed)
        v += (std::popcount(uint32_t(s) & p.mask) & 1) ? -int64_t(p.w) : int64_t(p.w);
    }
    if (first || v < ex.c_min) {
      ex.c_min = v;
      minimizers.clear();
    }
    if (v == ex.c_min) minimizers.push_back(s);
    if (first || v > ex.c_max) ex.c_max = v;
    first = false;
  }
  for (uint64_t s : minimizers) ex.ground_states.push_back(BitString::from_index(n, s));
  return ex;
}

double approximation_ratio(const Extrema& ex, double energy) {
  require(ex.c_max > ex.c_min, ErrorCode::InvalidArgument,
          "degenerate instance: c_max == c_min");
  return (double(ex.c_max) - energy) / double(ex.c_max - ex.c_min);
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : inst.edges)
    j["edges"].push_back({{"vertices", e.vertices}, {"weight", e.weight}});
  j["label"] = inst.label;
  if (inst.seed) j["seed"] = *inst.seed;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("instance JSON parse error: ") + e.what());
  }
  Instance inst;
  try {
    inst.n = j.at("n").get<int>();
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.vertices = je.at("vertices").get<std::vector<int>>();
      e.weight = je.at("weight").get<int>();
      inst.edges.push_back(std::move(e));
    }
    inst.label = j.value("label", std::string{});
    if (j.contains("seed")) inst.seed = j.at("seed").get<uint64_t>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("instance JSON field error: ") + e.what());
  }
  sort_edges(inst.edges);
  inst.convention = EnergyConvention::Cut;
  for (const auto& e : inst.edges)
    if (e.vertices.size() == 3) inst.convention = EnergyConvention::Spin;
  validate_instance(inst);
  return inst;
}

}  // namespace pq
