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
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"

namespace pq {

// Signed Max-Cut instances on graphs and hypergraphs.
//
// Two energy conventions exist and every instance declares the one it
// reports:
//   Cut:  C(s) = -sum_{(i,j)} J_ij (s_i xor s_j)             (pairwise only)
//   Spin: E(z) = sum J_ij z_i z_j + sum J_ijk z_i z_j z_k,   z = 1 - 2s
// For pairwise instances E(z) = 2 C(s) + sum(J), so approximation ratios are
// identical in either convention. Hypergraphs and RQAOA reductions use Spin.
enum class EnergyConvention { Cut, Spin };

struct Edge {
  std::vector<int> vertices;  // sorted, distinct, size 2 or 3
  int weight = 0;             // nonzero integer
};

struct Instance {
  int n = 0;
  std::vector<Edge> edges;  // sorted lexicographically by vertices
  std::string label;
  std::optional<uint64_t> seed;
  EnergyConvention convention = EnergyConvention::Cut;

  bool pairwise() const;
  int64_t weight_sum() const;
};

struct Extrema {
  int64_t c_min = 0;
  int64_t c_max = 0;
  // All minimizers; for pairwise instances these are the canonical
  // representatives with bit 0 fixed to 0.
  std::vector<BitString> ground_states;
};

enum class Topology { Complete, Regular4Fig3, HypergraphFig9 };

Topology topology_from_string(const std::string& s);
std::string topology_to_string(Topology t);

// Fixed edge sets for the two bundled benchmark graphs (8 vertices each):
// a 4-regular graph with 16 edges and a hypergraph with 10 two-vertex plus
// 7 three-vertex hyperedges.
const std::vector<std::vector<int>>& fig3_edge_sets();
const std::vector<std::vector<int>>& fig9_edge_sets();

// Validates all Instance invariants; throws on violation.
void validate_instance(const Instance& inst);

// Random +-1 weights on the requested topology; deterministic in the seed.
Instance random_instance(Topology topology, int n, uint64_t seed);

int64_t objective_value(const Instance& inst, const BitString& assignment);

// Exhaustive extrema; scans 2^(n-1) representatives for pure pairwise
// instances (global-flip symmetry), 2^n otherwise. Guarded at n <= 30.
Extrema brute_force_extrema(const Instance& inst);

double approximation_ratio(const Extrema& ex, double energy);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& json_text);

}  // namespace pq
