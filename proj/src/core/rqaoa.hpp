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

#include "optimize.hpp"

namespace pq {

// sigma_z[eliminated] := sign * sigma_z[anchor]; vertex ids refer to the
// instance the rule was derived on (original ids inside RqaoaTrace).
struct FixingRule {
  int eliminated = -1;
  int anchor = -1;
  int sign = 1;
  double abs_correlation = 0.0;
  bool zero_correlation = false;  // sign(0) -> +1 was applied
};

struct RqaoaTrace {
  std::vector<FixingRule> rules;  // application order; reverse to reconstruct
  std::vector<int64_t> spin_offsets;  // per step, from merged (anchor, eliminated) edges
  Instance residual;
  BitString residual_solution;
};

struct RqaoaResult {
  BitString assignment;  // full original assignment
  double ratio = 0.0;
  int64_t energy = 0;  // original instance convention
  RqaoaTrace trace;
  ResourceReport first_step_measured;
};

// W_jk = <Z_j Z_k> on the vanilla QAOA state, exact.
std::vector<std::vector<double>> correlation_matrix_vanilla(const Instance& inst,
                                                            const ParamVector& params);

// Decoded correlations averaged over the readout bases; the p = 1 path uses
// closed-form cone expectations, larger p the dense state.
std::vector<std::vector<double>> correlation_matrix_parity(const Instance& inst,
                                                           const ParityMapping& m,
                                                           const std::vector<ReadoutBasis>& bases,
                                                           const ParamVector& params);

struct Elimination {
  Instance reduced;
  FixingRule rule;          // ids of the parent instance
  int64_t spin_offset = 0;  // constant absorbed by the merged edge
  std::vector<int> index_map;  // reduced vertex -> parent vertex
};

// Fixes the edge of largest |W| (lexicographic tie-break) and substitutes;
// merged weights add, zero-weight edges are dropped.
Elimination eliminate(const Instance& inst, const std::vector<std::vector<double>>& w);

enum class RqaoaVariant { Vanilla, Parity };
RqaoaVariant rqaoa_variant_from_string(const std::string& s);

// Optimize -> correlate -> eliminate until n <= stop_size, brute-force the
// residual, then replay the fixing rules in reverse.
RqaoaResult run_rqaoa(const Instance& inst, RqaoaVariant variant, int p, int stop_size,
                      ObjectiveKind parity_kind, const OptimizerConfig& cfg);

std::string trace_to_json(const RqaoaTrace& trace);

}  // namespace pq
