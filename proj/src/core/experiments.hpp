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

#include <string>
#include <vector>

#include "optimize.hpp"
#include "rqaoa.hpp"

namespace pq {

// Batch experiment runner: a JSON config in, one CSV out. The config is
// echoed verbatim into a '#'-prefixed metadata header; identical configs and
// seeds produce byte-identical CSV bodies (wall-clock columns stay 0 unless
// timing is requested).
//
// Config keys (defaults in parentheses):
//   command: "lower-bound" | "census" | "qaoa" | "rqaoa" | "resources"
//   topology: "complete" ("complete") | "regular4_fig3" | "hypergraph_fig9"
//   n: int or [int,...] (problem sizes; fixed 8 for the bundled graphs)
//   p: int or [int,...] (1)
//   instances: int (20)
//   seed: uint64 (1)
//   m_bases: int (0 = topology default: N lines, 5 trees, 5 bases)
//   objective: "mean" | "best" | "best_per_shot" ("best")
//   mode: "exact" | "shots" ("exact"), shots: int (10000)
//   method: "vanilla" | "parity" | "both" ("both"; qaoa and rqaoa)
//   n_init (10), n_mc (400), temperature (0.2), step_halfwidth (0.25)
//   stop_size: int (8; rqaoa)
//   workers: int (0 = hardware)
//   timing: bool (false)
//   instance_files: [path,...] (qaoa/rqaoa; overrides topology sampling)
//   mapping_file: path (overrides the built-in mapping)
//   kinds: [string,...] (resources; default all six)
std::string run_experiment(const std::string& config_json);

// Sampled instances for a sweep; degenerate draws (c_max == c_min) are
// redrawn deterministically from the per-index stream.
std::vector<Instance> sample_instances(Topology topology, int n, int count, uint64_t seed);

}  // namespace pq
