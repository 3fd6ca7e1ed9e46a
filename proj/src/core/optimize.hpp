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

#include <functional>

#include "circuit.hpp"
#include "clifford_sim.hpp"
#include "decode.hpp"

namespace pq {

struct OptimizerConfig {
  int n_init = 10;                // independent restarts
  int n_mc = 400;                 // Monte-Carlo proposals per restart
  double temperature = 0.2;
  double step_halfwidth = 0.25;   // kappa ~ U[-hw, hw)
  int shots = 0;                  // 0 = exact expectation
  int copies = 0;                 // shot mode: 0 derives ceil(K/N)
  uint64_t seed = 0;

  void check() const {
    require(n_init >= 1 && n_mc >= 1, ErrorCode::InvalidArgument,
            "optimizer needs n_init, n_mc >= 1");
    require(temperature > 0.0, ErrorCode::InvalidArgument, "temperature must be positive");
    require(step_halfwidth > 0.0, ErrorCode::InvalidArgument, "step halfwidth must be positive");
    require(shots >= 0, ErrorCode::InvalidArgument, "shots must be >= 0");
  }
};

struct MetropolisResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  std::vector<double> restart_best;  // best value seen per restart
};

// Single-coordinate Metropolis search: random restarts in [-pi/2, pi/2),
// proposals theta -> theta + kappa accepted iff v < exp((C_old - C_new)/T).
// The returned optimum is the lowest value ever evaluated.
MetropolisResult metropolis_optimize(const std::function<double(const std::vector<double>&)>& f,
                                     int dim, const OptimizerConfig& cfg);

struct QaoaResult {
  ParamVector best_params;
  double best_objective = 0.0;
  double ratio = 0.0;
  ResourceReport measured;
  std::vector<double> restart_best;
  int copies_used = 1;
  bool exact_mode = true;
};

// Vanilla QAOA on the SWAP-network circuit. Shot mode takes the minimum
// energy estimate over `copies` independent sample sets per evaluation.
QaoaResult run_vanilla_qaoa(const Instance& inst, int p, const OptimizerConfig& cfg);

// Parity QAOA with decoded objectives. Exact-mode evaluation enumerates the
// dense state for K <= 22; for larger mappings the p=1 closed-form path is
// used (mean/best only). Initialization is uniform in [-pi/2, pi/2).
QaoaResult run_parity_qaoa(const Instance& inst, const ParityMapping& m,
                           const std::vector<ReadoutBasis>& bases, int p, ObjectiveKind kind,
                           const OptimizerConfig& cfg);

// <C>_t per readout basis from light-cone expectations, p = 1 only; the
// basis-average equals the mean objective for any K.
std::vector<double> p1_basis_energies(const Instance& inst, const ParityMapping& m,
                                      const std::vector<ReadoutBasis>& bases, double gamma,
                                      double omega, double beta);

}  // namespace pq
